//! Monomial bases of graded pieces and constrained linear systems.
//!
//! A linear system here is a list of [`MonomialClass`]es: a fibre monomial in
//! the non-base variables together with the degree of its general coefficient
//! in the two base variables and a required dividing power of the first base
//! variable. On top of that sit base loci, smoothness certificates, local
//! charts at coordinate points, localized support reports and the fibrewise
//! birational transform.

use crate::cones2d::{cross, ConeError};
use crate::graded_toric::{Bidegree, GradingMatrix, ToricModel};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("monomial `{0}` is not a fibre monomial of the system")]
    UnknownFibreMonomial(String),
    #[error("u_min {u_min} exceeds the coefficient degree {coeff_deg} of `{monomial}`")]
    UMinTooLarge {
        monomial: String,
        u_min: u32,
        coeff_deg: u32,
    },
    #[error("duplicate constraint for `{0}`")]
    DuplicateConstraint(String),
    #[error("system and model use different gradings")]
    GradingMismatch,
    #[error("the system has no classes")]
    EmptySystem,
    #[error("a stratum must name at least one variable")]
    EmptyStratum,
    #[error("stratum ({0}) is not a base stratum of the system")]
    NotABaseStratum(String),
    #[error("stratum must consist of exactly the variables other than the nonzero pair")]
    StratumNotComplement,
    #[error("columns of the nonzero pair are parallel (determinant 0); chart refused")]
    ParallelChartPair,
    #[error("columns of the nonzero pair span a local quotient group of order {0}; chart refused")]
    NonUnimodularChart(i64),
    #[error("grading does not have exactly two base variables on the fibration ray: {0}")]
    UnsupportedBaseStructure(String),
    #[error("stratum search limited to 20 variables, grading has {0}")]
    TooManyVariables(usize),
    #[error("transformed class `{monomial}` has degree {got}, expected {expected}")]
    DegreeMismatch {
        monomial: String,
        expected: Bidegree,
        got: Bidegree,
    },
    #[error("substitution may not shift base variable `{0}`")]
    ShiftOnBaseVariable(String),
    #[error("source and target gradings name different variables")]
    VariableSetMismatch,
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// Exponent vector of a monomial, one entry per variable of a grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn degree(&self, g: &GradingMatrix) -> Bidegree {
        let mut d1 = 0i128;
        let mut d2 = 0i128;
        for (e, c) in self.0.iter().zip(g.cols()) {
            d1 += *e as i128 * c.d1 as i128;
            d2 += *e as i128 * c.d2 as i128;
        }
        Bidegree::new(
            d1.try_into().expect("degree overflow"),
            d2.try_into().expect("degree overflow"),
        )
    }

    /// Graded-lexicographic order: lower total degree first, then the vector
    /// with the larger exponent on the earliest differing variable.
    pub fn grlex(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }

    /// Multiplicative rendering against a list of variable names, `x^3*z` style.
    pub fn format(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (e, v) in self.0.iter().zip(vars) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A coordinate subspace, given by the set of variables declared zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub zeros: BTreeSet<String>,
}

impl Stratum {
    pub fn new<I: IntoIterator<Item = String>>(zeros: I) -> Result<Self, MonomialError> {
        let zeros: BTreeSet<String> = zeros.into_iter().collect();
        if zeros.is_empty() {
            return Err(MonomialError::EmptyStratum);
        }
        Ok(Stratum { zeros })
    }

    pub fn from_strs(zeros: &[&str]) -> Self {
        Stratum {
            zeros: zeros.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Admissible for a model: contains neither irrelevant factor entirely.
    pub fn is_admissible(&self, model: &ToricModel) -> bool {
        let f_inside = model.irrelevant_f.iter().all(|v| self.zeros.contains(v));
        let g_inside = model.irrelevant_g.iter().all(|v| self.zeros.contains(v));
        !f_inside && !g_inside
    }

    fn indices(&self, g: &GradingMatrix) -> Result<Vec<usize>, MonomialError> {
        self.zeros
            .iter()
            .map(|v| {
                g.var_index(v)
                    .ok_or_else(|| MonomialError::UnknownVariable(v.clone()))
            })
            .collect()
    }

    /// Renders the zero set in the variable order of a grading.
    pub fn display_in(&self, g: &GradingMatrix) -> String {
        let names: Vec<&str> = g
            .vars()
            .iter()
            .filter(|v| self.zeros.contains(*v))
            .map(|v| v.as_str())
            .collect();
        format!("({})", names.join(","))
    }
}

/// One class of a linear system: a fibre monomial, the degree of its general
/// coefficient in the base variables, and the required power of the first
/// base variable dividing that coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialClass {
    /// Exponents over all variables, zero on the base variables.
    pub fibre: ExponentVector,
    pub coeff_deg: u32,
    pub u_min: u32,
}

/// A (possibly constrained, possibly incomplete) linear system of divisors of
/// a fixed bidegree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearSystem {
    pub ambient: GradingMatrix,
    pub degree: Bidegree,
    pub classes: Vec<MonomialClass>,
}

/// Indices of the two base variables of a grading; the first is the
/// designated `u` that carries divisibility constraints.
pub(crate) fn base_pair(g: &GradingMatrix) -> Result<(usize, usize), MonomialError> {
    let base = g.base_vars();
    if base.len() != 2 {
        return Err(MonomialError::UnsupportedBaseStructure(format!(
            "{} variable(s) on ray {}",
            base.len(),
            g.effective_cone().lo()
        )));
    }
    let lo = g.effective_cone().lo();
    for &i in &base {
        if g.col(i).coords() != lo.coords() {
            return Err(MonomialError::UnsupportedBaseStructure(format!(
                "column of `{}` is a non-primitive multiple of {}",
                g.vars()[i],
                lo
            )));
        }
    }
    Ok((base[0], base[1]))
}

/// Strictly positive functional on the effective cone, used to bound
/// enumeration.
fn positive_functional(g: &GradingMatrix) -> (i64, i64) {
    let lo = g.effective_cone().lo();
    let hi = g.effective_cone().hi();
    let lambda = (hi.y() - lo.y(), lo.x() - hi.x());
    debug_assert!(g.cols().iter().all(|c| dot(lambda, c.coords()) > 0));
    lambda
}

fn dot(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.0 as i128 + a.1 as i128 * b.1 as i128
}

/// All monomials of bidegree `d`: the nonnegative integer solutions of
/// `A·e = d`, in graded-lexicographic order.
pub fn enumerate_monomials(g: &GradingMatrix, d: Bidegree) -> Vec<ExponentVector> {
    let lambda = positive_functional(g);
    let n = g.len();
    let mut out = Vec::new();
    let mut acc = vec![0u32; n];
    fn go(
        g: &GradingMatrix,
        lambda: (i64, i64),
        i: usize,
        rem: (i128, i128),
        acc: &mut Vec<u32>,
        out: &mut Vec<ExponentVector>,
    ) {
        let budget = rem.0 * lambda.0 as i128 + rem.1 * lambda.1 as i128;
        if budget < 0 {
            return;
        }
        if i == g.len() {
            if rem == (0, 0) {
                out.push(ExponentVector(acc.clone()));
            }
            return;
        }
        let c = g.col(i);
        let weight = dot(lambda, c.coords());
        let max = (budget / weight) as u32;
        for e in 0..=max {
            acc[i] = e;
            let rem2 = (
                rem.0 - e as i128 * c.d1 as i128,
                rem.1 - e as i128 * c.d2 as i128,
            );
            go(g, lambda, i + 1, rem2, acc, out);
        }
        acc[i] = 0;
    }
    go(
        g,
        lambda,
        0,
        (d.d1 as i128, d.d2 as i128),
        &mut acc,
        &mut out,
    );
    out.sort_by(|a, b| a.grlex(b));
    out
}

/// The fibre monomials of degree `d` with their coefficient degrees, sorted.
pub fn fibre_classes(
    g: &GradingMatrix,
    d: Bidegree,
) -> Result<Vec<(ExponentVector, u32)>, MonomialError> {
    let (u, v) = base_pair(g)?;
    let mut seen: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for e in enumerate_monomials(g, d) {
        let k = e.0[u] + e.0[v];
        let mut fibre = e.0.clone();
        fibre[u] = 0;
        fibre[v] = 0;
        let prev = seen.insert(fibre, k);
        debug_assert!(prev.is_none_or(|p| p == k));
    }
    let mut classes: Vec<(ExponentVector, u32)> = seen
        .into_iter()
        .map(|(f, k)| (ExponentVector(f), k))
        .collect();
    classes.sort_by(|a, b| a.0.grlex(&b.0));
    Ok(classes)
}

/// Builds the full linear system of degree `d`, with `u_min` divisibility
/// constraints attached to the named fibre monomials and general coefficients
/// otherwise.
pub fn build_system(
    g: &GradingMatrix,
    d: Bidegree,
    constraints: &[(ExponentVector, u32)],
) -> Result<LinearSystem, MonomialError> {
    let classes = fibre_classes(g, d)?;
    let mut out: Vec<MonomialClass> = classes
        .into_iter()
        .map(|(fibre, coeff_deg)| MonomialClass {
            fibre,
            coeff_deg,
            u_min: 0,
        })
        .collect();
    let mut constrained: BTreeSet<Vec<u32>> = BTreeSet::new();
    for (fibre, u_min) in constraints {
        if !constrained.insert(fibre.0.clone()) {
            return Err(MonomialError::DuplicateConstraint(fibre.format(g.vars())));
        }
        let class = out
            .iter_mut()
            .find(|c| c.fibre == *fibre)
            .ok_or_else(|| MonomialError::UnknownFibreMonomial(fibre.format(g.vars())))?;
        if *u_min > class.coeff_deg {
            return Err(MonomialError::UMinTooLarge {
                monomial: fibre.format(g.vars()),
                u_min: *u_min,
                coeff_deg: class.coeff_deg,
            });
        }
        class.u_min = *u_min;
    }
    Ok(LinearSystem {
        ambient: g.clone(),
        degree: d,
        classes: out,
    })
}

impl LinearSystem {
    /// Drops the named fibre monomials from the system (a strict subsystem,
    /// as produced by fibrewise transforms).
    pub fn without_fibres(&self, fibres: &[ExponentVector]) -> Result<LinearSystem, MonomialError> {
        let mut sys = self.clone();
        for f in fibres {
            let before = sys.classes.len();
            sys.classes.retain(|c| c.fibre != *f);
            if sys.classes.len() == before {
                return Err(MonomialError::UnknownFibreMonomial(
                    f.format(self.ambient.vars()),
                ));
            }
        }
        Ok(sys)
    }

    pub fn class_for(&self, fibre: &ExponentVector) -> Option<&MonomialClass> {
        self.classes.iter().find(|c| &c.fibre == fibre)
    }

    /// Fibre monomials of the full system of this degree that have no class
    /// in this system.
    pub fn missing_fibres(&self) -> Result<Vec<ExponentVector>, MonomialError> {
        let full = fibre_classes(&self.ambient, self.degree)?;
        Ok(full
            .into_iter()
            .map(|(f, _)| f)
            .filter(|f| self.class_for(f).is_none())
            .collect())
    }

    /// Total number of monomials, coefficients expanded.
    pub fn monomial_dimension(&self) -> u64 {
        self.classes
            .iter()
            .map(|c| (c.coeff_deg - c.u_min) as u64 + 1)
            .sum()
    }
}

/// Does a class vanish identically on the coordinate subspace `V(S)`?
///
/// The class `(m, k, i)` vanishes exactly when a fibre variable of `m` lies
/// in `S`, or `u ∈ S` and `i ≥ 1`, or both base variables lie in `S` and
/// `k ≥ 1`. The second base variable alone never kills a class.
pub(crate) fn class_vanishes_on(
    class: &MonomialClass,
    zeros: &BTreeSet<usize>,
    base: (usize, usize),
) -> bool {
    let fibre_hit = class
        .fibre
        .0
        .iter()
        .enumerate()
        .any(|(i, &e)| e > 0 && zeros.contains(&i));
    if fibre_hit {
        return true;
    }
    if zeros.contains(&base.0) && class.u_min >= 1 {
        return true;
    }
    zeros.contains(&base.0) && zeros.contains(&base.1) && class.coeff_deg >= 1
}

/// The inclusion-minimal admissible strata on which every class of the
/// system vanishes identically.
pub fn base_locus(model: &ToricModel, s: &LinearSystem) -> Result<Vec<Stratum>, MonomialError> {
    if s.ambient != model.grading {
        return Err(MonomialError::GradingMismatch);
    }
    if s.classes.is_empty() {
        return Err(MonomialError::EmptySystem);
    }
    let g = &s.ambient;
    let n = g.len();
    if n > 20 {
        return Err(MonomialError::TooManyVariables(n));
    }
    let base = base_pair(g)?;
    let f_idx: Vec<usize> = model
        .irrelevant_f
        .iter()
        .map(|v| g.var_index(v).expect("model over same grading"))
        .collect();
    let g_idx: Vec<usize> = model
        .irrelevant_g
        .iter()
        .map(|v| g.var_index(v).expect("model over same grading"))
        .collect();
    let mut hits: Vec<Vec<usize>> = Vec::new();
    for mask in 1u64..(1 << n) {
        let zeros: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if f_idx.iter().all(|i| zeros.contains(i)) || g_idx.iter().all(|i| zeros.contains(i)) {
            continue;
        }
        if s.classes.iter().all(|c| class_vanishes_on(c, &zeros, base)) {
            hits.push(zeros.into_iter().collect());
        }
    }
    let minimal: Vec<Vec<usize>> = hits
        .iter()
        .filter(|s| {
            !hits
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|i| s.contains(i)))
        })
        .cloned()
        .collect();
    let mut sorted = minimal;
    sorted.sort();
    Ok(sorted
        .into_iter()
        .map(|idxs| Stratum {
            zeros: idxs.into_iter().map(|i| g.vars()[i].clone()).collect(),
        })
        .collect())
}

/// A class certifying generic smoothness along the open part of a stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothnessWitness {
    pub class: MonomialClass,
    /// The stratum variable the fibre monomial is linear in.
    pub linear_var: String,
}

/// Looks for a class whose fibre part is linear in exactly one stratum
/// variable, avoids every other stratum variable, and whose residual part
/// does not vanish identically on the stratum. Returns `None` when no such
/// witness exists: the stratum is then a singularity candidate, not a proven
/// singularity.
pub fn smoothness_certificate(
    model: &ToricModel,
    s: &LinearSystem,
    st: &Stratum,
) -> Result<Option<SmoothnessWitness>, MonomialError> {
    let locus = base_locus(model, s)?;
    if !locus.contains(st) {
        return Err(MonomialError::NotABaseStratum(st.display_in(&s.ambient)));
    }
    let g = &s.ambient;
    let base = base_pair(g)?;
    let zeros: BTreeSet<usize> = st.indices(g)?.into_iter().collect();
    for class in &s.classes {
        let in_stratum: Vec<(usize, u32)> = class
            .fibre
            .0
            .iter()
            .enumerate()
            .filter(|(i, &e)| e > 0 && zeros.contains(i))
            .map(|(i, &e)| (i, e))
            .collect();
        let [(w, 1)] = in_stratum.as_slice() else {
            continue;
        };
        let mut residual = class.clone();
        residual.fibre.0[*w] = 0;
        let mut zeros_rest = zeros.clone();
        zeros_rest.remove(w);
        if !class_vanishes_on(&residual, &zeros_rest, base) {
            return Ok(Some(SmoothnessWitness {
                class: class.clone(),
                linear_var: g.vars()[*w].clone(),
            }));
        }
    }
    Ok(None)
}

/// The invariant local coordinates of the chart where two variables are set
/// nonzero: each remaining variable `w` becomes `w·a^(-α)·b^(-β)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalChart {
    pub nonzero: (String, String),
    /// `(variable, α, β)` per remaining variable, in grading order.
    pub coords: Vec<(String, i64, i64)>,
}

impl LocalChart {
    pub fn chart_vars(&self) -> Vec<String> {
        self.coords.iter().map(|(v, _, _)| v.clone()).collect()
    }
}

pub fn local_chart(
    g: &GradingMatrix,
    nonzero: (&str, &str),
    point_stratum: &Stratum,
) -> Result<LocalChart, MonomialError> {
    let a = g
        .var_index(nonzero.0)
        .ok_or_else(|| MonomialError::UnknownVariable(nonzero.0.to_string()))?;
    let b = g
        .var_index(nonzero.1)
        .ok_or_else(|| MonomialError::UnknownVariable(nonzero.1.to_string()))?;
    let expected: BTreeSet<String> = g
        .vars()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != a && *i != b)
        .map(|(_, v)| v.clone())
        .collect();
    if point_stratum.zeros != expected {
        return Err(MonomialError::StratumNotComplement);
    }
    let ca = g.col(a);
    let cb = g.col(b);
    let det = cross(ca.coords(), cb.coords());
    if det == 0 {
        return Err(MonomialError::ParallelChartPair);
    }
    if det.abs() != 1 {
        return Err(MonomialError::NonUnimodularChart(
            det.abs().try_into().unwrap_or(i64::MAX),
        ));
    }
    let det = det as i64;
    let mut coords = Vec::new();
    for (i, w) in g.vars().iter().enumerate() {
        if i == a || i == b {
            continue;
        }
        let cw = g.col(i);
        // solve alpha*ca + beta*cb = cw by Cramer's rule; det is ±1
        let alpha = (cross(cw.coords(), cb.coords()) as i64) * det;
        let beta = (cross(ca.coords(), cw.coords()) as i64) * det;
        debug_assert_eq!(alpha * ca.d1 + beta * cb.d1, cw.d1);
        debug_assert_eq!(alpha * ca.d2 + beta * cb.d2, cw.d2);
        coords.push((w.clone(), alpha, beta));
    }
    Ok(LocalChart {
        nonzero: (nonzero.0.to_string(), nonzero.1.to_string()),
        coords,
    })
}

/// Localized support of a system in a chart: monomial sets per total degree
/// and minimal pure powers of the chart coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub chart_vars: Vec<String>,
    pub degree_bound: u32,
    pub min_total_degree: Option<u32>,
    /// `(total degree, monomials over the chart variables)`, degrees up to
    /// the bound that actually occur.
    pub parts: Vec<(u32, Vec<ExponentVector>)>,
    /// Minimal exponent of each chart coordinate occurring as a pure power.
    pub pure_powers: Vec<(String, Option<u32>)>,
    /// Set when the pure-power signature looks like a cE6 germ. Heuristic:
    /// raw support facts only, no analytic normalization is performed.
    pub heuristic_note: Option<String>,
}

pub const DEFAULT_SUPPORT_BOUND: u32 = 6;

pub fn local_support(
    s: &LinearSystem,
    chart: &LocalChart,
    degree_bound: u32,
) -> Result<SupportReport, MonomialError> {
    let g = &s.ambient;
    let (u, v) = base_pair(g)?;
    for name in [&chart.nonzero.0, &chart.nonzero.1] {
        if g.var_index(name).is_none() {
            return Err(MonomialError::UnknownVariable(name.clone()));
        }
    }
    let chart_idx: Vec<usize> = chart
        .coords
        .iter()
        .map(|(w, _, _)| {
            g.var_index(w)
                .ok_or_else(|| MonomialError::UnknownVariable(w.clone()))
        })
        .collect::<Result<_, _>>()?;
    let mut localized: BTreeSet<Vec<u32>> = BTreeSet::new();
    for class in &s.classes {
        for j in class.u_min..=class.coeff_deg {
            let mut full = class.fibre.0.clone();
            full[u] += j;
            full[v] += class.coeff_deg - j;
            let vec: Vec<u32> = chart_idx.iter().map(|&i| full[i]).collect();
            localized.insert(vec);
        }
    }
    let total = |e: &Vec<u32>| e.iter().sum::<u32>();
    let min_total_degree = localized.iter().map(total).min();
    let mut by_degree: BTreeMap<u32, Vec<ExponentVector>> = BTreeMap::new();
    for e in &localized {
        let t = total(e);
        if t <= degree_bound {
            by_degree
                .entry(t)
                .or_default()
                .push(ExponentVector(e.clone()));
        }
    }
    for part in by_degree.values_mut() {
        part.sort_by(|a, b| a.grlex(b));
    }
    let pure_powers: Vec<(String, Option<u32>)> = chart
        .coords
        .iter()
        .enumerate()
        .map(|(pos, (w, _, _))| {
            let min_pure = localized
                .iter()
                .filter(|e| e.iter().enumerate().all(|(i, &x)| (i == pos) != (x == 0)))
                .map(total)
                .min();
            (w.clone(), min_pure)
        })
        .collect();
    let heuristic_note = ce6_note(&by_degree, &pure_powers, min_total_degree);
    Ok(SupportReport {
        chart_vars: chart.chart_vars(),
        degree_bound,
        min_total_degree,
        parts: by_degree.into_iter().collect(),
        pure_powers,
        heuristic_note,
    })
}

/// Heuristic cE6 signature: in a 4-coordinate chart, the quadratic part is a
/// single pure square and two further coordinates have minimal pure powers 3
/// and 4.
fn ce6_note(
    by_degree: &BTreeMap<u32, Vec<ExponentVector>>,
    pure_powers: &[(String, Option<u32>)],
    min_total: Option<u32>,
) -> Option<String> {
    if pure_powers.len() != 4 || min_total != Some(2) {
        return None;
    }
    let quad = by_degree.get(&2)?;
    if quad.len() != 1 || !quad[0].0.contains(&2) {
        return None;
    }
    let mut powers: Vec<u32> = pure_powers.iter().filter_map(|(_, p)| *p).collect();
    powers.sort_unstable();
    if powers.starts_with(&[2, 3, 4]) {
        let named: Vec<String> = pure_powers
            .iter()
            .filter_map(|(w, p)| p.map(|p| format!("{w}:{p}")))
            .collect();
        Some(format!(
            "pure-power signature {{{}}} matches a cE6 germ (heuristic; raw support only)",
            named.join(", ")
        ))
    } else {
        None
    }
}

/// Rewrites a system under a fibrewise substitution `w ↦ u^s·w` and cancels
/// the common power of `u`, re-reading the result in the target grading.
///
/// The shifts are given per variable (absent means 0); base variables may not
/// be shifted. Negative shifts describe the inverse transform; the cancelled
/// content is then negative, which restores the factored power.
pub fn fibrewise_transform(
    s: &LinearSystem,
    shifts: &[(String, i64)],
    target: &GradingMatrix,
) -> Result<LinearSystem, MonomialError> {
    let g = &s.ambient;
    let (u, _) = base_pair(g)?;
    let (tu, _) = base_pair(target)?;
    if target.vars()[tu] != g.vars()[u] {
        return Err(MonomialError::VariableSetMismatch);
    }
    let mut source_sorted: Vec<&String> = g.vars().iter().collect();
    let mut target_sorted: Vec<&String> = target.vars().iter().collect();
    source_sorted.sort();
    target_sorted.sort();
    if source_sorted != target_sorted {
        return Err(MonomialError::VariableSetMismatch);
    }
    let mut shift_by_idx = vec![0i64; g.len()];
    for (name, power) in shifts {
        let i = g
            .var_index(name)
            .ok_or_else(|| MonomialError::UnknownVariable(name.clone()))?;
        if g.base_vars().contains(&i) && *power != 0 {
            return Err(MonomialError::ShiftOnBaseVariable(name.clone()));
        }
        shift_by_idx[i] = *power;
    }
    if s.classes.is_empty() {
        return Err(MonomialError::EmptySystem);
    }
    let shifted: Vec<(usize, i64, i64)> = s
        .classes
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let delta: i64 = c
                .fibre
                .0
                .iter()
                .zip(&shift_by_idx)
                .map(|(&e, &sh)| e as i64 * sh)
                .sum();
            (idx, c.u_min as i64 + delta, c.coeff_deg as i64 + delta)
        })
        .collect();
    let content = shifted.iter().map(|(_, i, _)| *i).min().expect("nonempty");
    let reindex: Vec<usize> = target
        .vars()
        .iter()
        .map(|v| g.var_index(v).expect("same variable set"))
        .collect();
    let mut classes = Vec::new();
    let mut degree: Option<Bidegree> = None;
    let target_base_ray = target.effective_cone().lo();
    for (idx, i_new, k_new) in shifted {
        let old = &s.classes[idx];
        let fibre = ExponentVector(reindex.iter().map(|&i| old.fibre.0[i]).collect());
        let u_min = u32::try_from(i_new - content).expect("content is the minimum");
        let coeff_deg = u32::try_from(k_new - content).expect("coeff_deg >= u_min");
        let class_degree = fibre.degree(target)
            + Bidegree::new(target_base_ray.x(), target_base_ray.y()).scale(coeff_deg as i64);
        match degree {
            None => degree = Some(class_degree),
            Some(d) if d != class_degree => {
                return Err(MonomialError::DegreeMismatch {
                    monomial: fibre.format(target.vars()),
                    expected: d,
                    got: class_degree,
                });
            }
            _ => {}
        }
        classes.push(MonomialClass {
            fibre,
            coeff_deg,
            u_min,
        });
    }
    classes.sort_by(|a, b| a.fibre.grlex(&b.fibre));
    Ok(LinearSystem {
        ambient: target.clone(),
        degree: degree.expect("nonempty"),
        classes,
    })
}

/// The cancelled content of a transform: the minimal shifted `u_min`.
pub fn transform_content(s: &LinearSystem, shifts: &[(String, i64)]) -> Result<i64, MonomialError> {
    let g = &s.ambient;
    if s.classes.is_empty() {
        return Err(MonomialError::EmptySystem);
    }
    let mut shift_by_idx = vec![0i64; g.len()];
    for (name, power) in shifts {
        let i = g
            .var_index(name)
            .ok_or_else(|| MonomialError::UnknownVariable(name.clone()))?;
        shift_by_idx[i] = *power;
    }
    Ok(s.classes
        .iter()
        .map(|c| {
            c.u_min as i64
                + c.fibre
                    .0
                    .iter()
                    .zip(&shift_by_idx)
                    .map(|(&e, &sh)| e as i64 * sh)
                    .sum::<i64>()
        })
        .min()
        .expect("nonempty"))
}

/// Spot check that the partial derivative with respect to a witness variable
/// is a nonzero polynomial on the stratum, for a random coefficient
/// instantiation respecting the constraints. Symbolic at the monomial level;
/// coefficients are drawn from [1, 10^6] with a seeded generator.
pub fn witness_derivative_is_nonzero(
    s: &LinearSystem,
    st: &Stratum,
    witness_var: &str,
    seed: u64,
) -> Result<bool, MonomialError> {
    let g = &s.ambient;
    let (u, v) = base_pair(g)?;
    let w = g
        .var_index(witness_var)
        .ok_or_else(|| MonomialError::UnknownVariable(witness_var.to_string()))?;
    let zeros: BTreeSet<usize> = st.indices(g)?.into_iter().collect();
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) % 1_000_000 + 1) as i128
    };
    let mut sums: BTreeMap<Vec<u32>, i128> = BTreeMap::new();
    for class in &s.classes {
        for j in class.u_min..=class.coeff_deg {
            let coeff = next();
            let e_w = class.fibre.0[w];
            if e_w == 0 {
                continue;
            }
            let mut m = class.fibre.0.clone();
            m[u] += j;
            m[v] += class.coeff_deg - j;
            m[w] -= 1;
            if m.iter()
                .enumerate()
                .any(|(i, &e)| e > 0 && zeros.contains(&i))
            {
                continue;
            }
            *sums.entry(m).or_insert(0) += coeff * e_w as i128;
        }
    }
    Ok(sums.values().any(|&c| c != 0))
}

impl fmt::Display for MonomialClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[classes are displayed against their grading]")
    }
}
