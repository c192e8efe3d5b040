//! Section rings of rays: minimal generators, ambient weighted projective
//! spaces and rewriting of equations in the generators.
//!
//! The section ring of a ray r is the graded ring of all monomials whose
//! bidegree is a nonnegative multiple of r. Its Proj is the model or image
//! variety sitting at that ray. Relations among the generators are out of
//! scope; the weight multiset of a minimal generating set is the embedding
//! datum the game verdicts need.

use crate::cones2d::ConePosition;
use crate::graded_toric::{Bidegree, GradingMatrix};
use crate::monomials::{enumerate_monomials, ExponentVector, LinearSystem, MonomialError};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SectionError {
    #[error("ray {0} lies outside the effective cone")]
    RayOutsideEffectiveCone(crate::cones2d::Ray),
    #[error("bound must be at least 1")]
    ZeroBound,
    #[error("monomial `{0}` is not a product of the ray generators")]
    NotFactorable(String),
    #[error("rewritten terms have mixed generator weights ({0} and {1})")]
    MixedWeights(u32, u32),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}

/// A minimal generating set of the section ring of a ray, up to a weight
/// bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionRingPresentation {
    pub ray: crate::cones2d::Ray,
    /// `(monomial, weight)` pairs, weights ascending.
    pub generators: Vec<(ExponentVector, u32)>,
    pub degree_bound: u32,
    /// Heuristic completeness: true when twice the largest generator weight
    /// is within the bound, so one full round of products has been verified
    /// closed above every generator.
    pub complete_up_to_bound: bool,
}

impl SectionRingPresentation {
    /// The weight multiset of the ambient weighted projective space.
    pub fn ambient_weights(&self) -> Vec<u32> {
        let mut w: Vec<u32> = self.generators.iter().map(|(_, w)| *w).collect();
        w.sort_unstable();
        w
    }

    pub fn format_generators(&self, g: &GradingMatrix) -> Vec<String> {
        self.generators
            .iter()
            .map(|(e, w)| format!("{} (weight {})", e.format(g.vars()), w))
            .collect()
    }
}

/// Compact rendering of a weight multiset, `P(1^9,2^3)` style.
pub fn format_weights(weights: &[u32]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut iter = weights.iter().peekable();
    while let Some(&w) = iter.next() {
        let mut count = 1;
        while iter.peek() == Some(&&w) {
            iter.next();
            count += 1;
        }
        if count == 1 {
            parts.push(format!("{w}"));
        } else {
            parts.push(format!("{w}^{count}"));
        }
    }
    format!("P({})", parts.join(","))
}

/// Minimal generators of the section ring of `r`, weight by weight up to
/// `bound`: enumerate each graded piece and strip everything that is a
/// product of generators already found.
pub fn section_generators(
    g: &GradingMatrix,
    r: crate::cones2d::Ray,
    bound: u32,
) -> Result<SectionRingPresentation, SectionError> {
    if bound == 0 {
        return Err(SectionError::ZeroBound);
    }
    if g.effective_cone()
        .position(r.coords())
        .map_err(MonomialError::Cone)?
        == ConePosition::Exterior
    {
        return Err(SectionError::RayOutsideEffectiveCone(r));
    }
    let piece = |m: u32| -> Vec<ExponentVector> {
        enumerate_monomials(g, Bidegree::new(r.x(), r.y()).scale(m as i64))
    };
    let mut bases: Vec<Vec<ExponentVector>> = vec![vec![ExponentVector::zeros(g.len())]];
    let mut generators: Vec<(ExponentVector, u32)> = Vec::new();
    for m in 1..=bound {
        let basis = piece(m);
        let mut products: BTreeSet<Vec<u32>> = BTreeSet::new();
        for (gen, w) in &generators {
            if *w >= m {
                continue;
            }
            for e in &bases[(m - w) as usize] {
                let sum: Vec<u32> = gen.0.iter().zip(&e.0).map(|(a, b)| a + b).collect();
                products.insert(sum);
            }
        }
        for e in &basis {
            if !products.contains(&e.0) {
                generators.push((e.clone(), m));
            }
        }
        bases.push(basis);
    }
    let max_weight = generators.iter().map(|(_, w)| *w).max().unwrap_or(0);
    Ok(SectionRingPresentation {
        ray: r,
        generators,
        degree_bound: bound,
        complete_up_to_bound: max_weight > 0 && 2 * max_weight <= bound,
    })
}

/// Checks that the given generators produce every monomial of every graded
/// piece up to the bound (used to verify minimality by omission).
pub fn generators_span(
    g: &GradingMatrix,
    r: crate::cones2d::Ray,
    bound: u32,
    generators: &[(ExponentVector, u32)],
) -> bool {
    let mut closure: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); bound as usize + 1];
    closure[0].insert(vec![0; g.len()]);
    for m in 1..=bound {
        let mut layer = BTreeSet::new();
        for (gen, w) in generators {
            if *w > m {
                continue;
            }
            for e in &closure[(m - w) as usize] {
                let sum: Vec<u32> = gen.0.iter().zip(e.iter()).map(|(a, b)| a + b).collect();
                layer.insert(sum);
            }
        }
        closure[m as usize] = layer;
        let basis: BTreeSet<Vec<u32>> =
            enumerate_monomials(g, Bidegree::new(r.x(), r.y()).scale(m as i64))
                .into_iter()
                .map(|e| e.0)
                .collect();
        if closure[m as usize] != basis {
            return false;
        }
    }
    true
}

/// One rewritten term: a monomial of the system expressed as a product of
/// generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewrittenTerm {
    pub monomial: ExponentVector,
    /// Indices into the presentation's generator list, with multiplicity.
    pub factors: Vec<usize>,
    pub weight: u32,
}

/// A full system rewritten in the generators of a ray presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewrittenSystem {
    pub terms: Vec<RewrittenTerm>,
    /// The common generator weight of all terms: the degree of the image
    /// hypersurface in the ambient weighted projective space.
    pub image_weight: u32,
}

/// Expresses every expanded monomial of the system as a product of the ray
/// generators, greedily trying generators by descending weight and then by
/// descending exponent order. Fails on the first monomial that does not
/// factor, which signals that the equation is not pulled back from the image.
pub fn rewrite_in_generators(
    s: &LinearSystem,
    p: &SectionRingPresentation,
) -> Result<RewrittenSystem, SectionError> {
    let g = &s.ambient;
    let base = crate::monomials::base_pair(g)?;
    let mut order: Vec<usize> = (0..p.generators.len()).collect();
    order.sort_by(|&i, &j| {
        let (gi, wi) = &p.generators[i];
        let (gj, wj) = &p.generators[j];
        wj.cmp(wi).then_with(|| gj.0.cmp(&gi.0))
    });
    let mut terms = Vec::new();
    let mut weight: Option<u32> = None;
    for class in &s.classes {
        for j in class.u_min..=class.coeff_deg {
            let mut m = class.fibre.0.clone();
            m[base.0] += j;
            m[base.1] += class.coeff_deg - j;
            let monomial = ExponentVector(m.clone());
            let mut factors = Vec::new();
            let mut total = 0u32;
            let mut rem = m;
            while rem.iter().any(|&e| e > 0) {
                let found = order
                    .iter()
                    .find(|&&gi| p.generators[gi].0 .0.iter().zip(&rem).all(|(a, b)| a <= b));
                match found {
                    Some(&gi) => {
                        let (gen, w) = &p.generators[gi];
                        for (r, a) in rem.iter_mut().zip(&gen.0) {
                            *r -= a;
                        }
                        factors.push(gi);
                        total += w;
                    }
                    None => {
                        return Err(SectionError::NotFactorable(
                            ExponentVector(rem).format(g.vars()),
                        ));
                    }
                }
            }
            match weight {
                None => weight = Some(total),
                Some(w) if w != total => return Err(SectionError::MixedWeights(w, total)),
                _ => {}
            }
            terms.push(RewrittenTerm {
                monomial,
                factors,
                weight: total,
            });
        }
    }
    let image_weight = weight.ok_or(MonomialError::EmptySystem)?;
    Ok(RewrittenSystem {
        terms,
        image_weight,
    })
}

/// Fano index of a weighted hypersurface: sum of the ambient weights minus
/// the hypersurface degree. Positive means Fano of that index.
pub fn wps_index(weights: &[u32], hyp_degree: u32) -> i64 {
    weights.iter().map(|&w| w as i64).sum::<i64>() - hyp_degree as i64
}

impl fmt::Display for SectionRingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "section ring at {} in {}",
            self.ray,
            format_weights(&self.ambient_weights())
        )
    }
}
