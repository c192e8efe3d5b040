//! The 2-ray game: wall and boundary classification on the toric ambient
//! space, restriction to a hypersurface, Mori-category checks and the
//! end-to-end trace.
//!
//! Walking counterclockwise from the fibration boundary, every ray of the
//! chamber fan inside the mobile cone is classified, the crossing is
//! restricted to the hypersurface by the disjointness and elimination rules,
//! and each restricted step is checked against the Mori category. A clean run
//! ends in a link whose image is described by the section ring of the
//! terminal ray.

use crate::cones2d::{cross, normalize_wall, Cone2, ConeError, Ray, UnimodularMap};
use crate::graded_toric::{
    adjunction_anticanonical, chamber_fan, mobile_cone_toric, model_from_chamber, Bidegree,
    GradingError, GradingMatrix, ToricModel,
};
use crate::monomials::{base_pair, class_vanishes_on, LinearSystem, MonomialClass, MonomialError};
use crate::sectionring::{
    rewrite_in_generators, section_generators, wps_index, SectionError, SectionRingPresentation,
};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("ray {0} is not an extreme ray of the effective cone")]
    NotExtreme(Ray),
    #[error("ray {0} is not an interior wall of the chamber fan")]
    NotAWall(Ray),
    #[error("chamber {0} is not adjacent to the wall {1}")]
    NotAdjacent(Cone2, Ray),
    #[error("system and crossing use different gradings")]
    GradingMismatch,
    #[error("no fibration boundary: fewer than two variables on the extreme ray {0}")]
    NoFibrationBoundary(Ray),
    #[error("the model's chamber must touch the fibration boundary")]
    ChamberNotAtFibration,
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// What kind of event a ray of the fan carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WallKind {
    /// Both sides keep at least two variables: a small modification.
    Small,
    /// Exactly one side is a single variable: its divisor is contracted.
    DivisorialContracts(String),
    /// Effective boundary carried by at least two variables.
    BoundaryFibration,
    /// Effective boundary carried by a single variable.
    BoundaryDivisorial(String),
}

impl fmt::Display for WallKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WallKind::Small => write!(f, "small"),
            WallKind::DivisorialContracts(v) => write!(f, "divisorial (contracts {v})"),
            WallKind::BoundaryFibration => write!(f, "boundary fibration"),
            WallKind::BoundaryDivisorial(v) => write!(f, "boundary divisorial ({v})"),
        }
    }
}

/// A classified crossing of the toric ambient space at one ray.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallCrossing {
    pub wall: Ray,
    pub normalizer: UnimodularMap,
    /// `(variable, first coordinate after normalization)` for every variable.
    pub weights: Vec<(String, i64)>,
    pub positive_side: Vec<String>,
    pub wall_vars: Vec<String>,
    pub negative_side: Vec<String>,
    pub kind: WallKind,
}

impl WallCrossing {
    /// The nonzero weights in variable order, the toric type of the crossing.
    pub fn toric_type(&self) -> Vec<i64> {
        self.weights
            .iter()
            .map(|(_, w)| *w)
            .filter(|w| *w != 0)
            .collect()
    }
}

/// How a toric crossing restricts to the hypersurface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RestrictionResult {
    /// A smaller small crossing with the eliminated variable removed.
    RestrictedSmall {
        weights: Vec<(String, i64)>,
    },
    /// The crossing locus misses the hypersurface entirely.
    IsomorphismDisjoint {
        witness: String,
    },
    Divisorial,
    Fibration,
}

/// Sign class of a small crossing, by the sum of its weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KSign {
    Flip,
    Flop,
    Antiflip,
    NotSmall,
}

impl fmt::Display for KSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KSign::Flip => write!(f, "flip"),
            KSign::Flop => write!(f, "flop"),
            KSign::Antiflip => write!(f, "antiflip"),
            KSign::NotSmall => write!(f, "not small"),
        }
    }
}

/// A toric crossing together with its restriction to the hypersurface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedCrossing {
    pub parent: WallCrossing,
    pub eliminated: Option<String>,
    pub result: RestrictionResult,
    pub k_sign: KSign,
    /// Neither restriction rule fired; the unrestricted weights are carried
    /// through with a warning.
    pub inconclusive: bool,
}

/// Outcome of the Mori-category check of one restricted crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoriCheck {
    Ok,
    OkWithNote(String),
    Fail(MoriFailure),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoriFailure {
    NonIsolatedSingularities,
    KTrivialContraction,
}

impl fmt::Display for MoriFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoriFailure::NonIsolatedSingularities => {
                write!(f, "non-isolated singularities on extracted locus")
            }
            MoriFailure::KTrivialContraction => write!(f, "K-trivial contraction"),
        }
    }
}

/// Classifies an extreme ray of the effective cone.
pub fn classify_boundary(g: &GradingMatrix, r: Ray) -> Result<WallCrossing, GameError> {
    let fan = chamber_fan(g);
    let k = fan.rays.len();
    let idx = if fan.rays[0] == r {
        0
    } else if fan.rays[k - 1] == r {
        k - 1
    } else {
        return Err(GameError::NotExtreme(r));
    };
    let on_ray = &fan.vars_on_ray[idx];
    let kind = if on_ray.len() >= 2 {
        WallKind::BoundaryFibration
    } else {
        WallKind::BoundaryDivisorial(on_ray[0].clone())
    };
    // Interior of the unique adjacent chamber, reflected for the low end so
    // that the orientation lies on the positive side of the wall.
    let neighbor = if idx == 0 {
        fan.rays[1]
    } else {
        fan.rays[k - 2]
    };
    let interior = (r.x() + neighbor.x(), r.y() + neighbor.y());
    let orient = if idx == 0 {
        Ray::primitivize(-interior.0, -interior.1)?
    } else {
        Ray::primitivize(interior.0, interior.1)?
    };
    let normalizer = normalize_wall(r, orient)?;
    Ok(assemble_crossing(g, r, normalizer, kind))
}

/// Classifies an interior wall of the chamber fan, crossed out of
/// `from_chamber`. The positive side is the side the crossing comes from.
pub fn classify_wall(
    g: &GradingMatrix,
    w: Ray,
    from_chamber: Cone2,
) -> Result<WallCrossing, GameError> {
    let fan = chamber_fan(g);
    let k = fan.rays.len();
    let idx = fan
        .rays
        .iter()
        .position(|&r| r == w)
        .filter(|&i| i > 0 && i < k - 1)
        .ok_or(GameError::NotAWall(w))?;
    let below = fan.chambers[idx - 1];
    let above = fan.chambers[idx];
    let interior = |c: Cone2| {
        Ray::primitivize(c.lo().x() + c.hi().x(), c.lo().y() + c.hi().y())
            .expect("chamber interior is nonzero")
    };
    let (wall, orient) = if from_chamber == below {
        (w, interior(below))
    } else if from_chamber == above {
        // crossing downwards: normalize the opposite ray so the from side
        // stays positive
        (w.opposite(), interior(above))
    } else {
        return Err(GameError::NotAdjacent(from_chamber, w));
    };
    let normalizer = normalize_wall(wall, orient)?;
    let mut crossing = assemble_crossing(g, wall, normalizer, WallKind::Small);
    crossing.wall = w;
    let pos = crossing.positive_side.len();
    let neg = crossing.negative_side.len();
    crossing.kind = if (pos == 1) != (neg == 1) {
        let side = if pos == 1 {
            &crossing.positive_side
        } else {
            &crossing.negative_side
        };
        WallKind::DivisorialContracts(side[0].clone())
    } else {
        WallKind::Small
    };
    Ok(crossing)
}

fn assemble_crossing(
    g: &GradingMatrix,
    wall: Ray,
    normalizer: UnimodularMap,
    kind: WallKind,
) -> WallCrossing {
    let mut weights = Vec::new();
    let mut positive = Vec::new();
    let mut on_wall = Vec::new();
    let mut negative = Vec::new();
    for (name, col) in g.vars().iter().zip(g.cols()) {
        let w = normalizer.apply(col.coords()).0;
        weights.push((name.clone(), w));
        match w.cmp(&0) {
            std::cmp::Ordering::Greater => positive.push(name.clone()),
            std::cmp::Ordering::Equal => on_wall.push(name.clone()),
            std::cmp::Ordering::Less => negative.push(name.clone()),
        }
    }
    WallCrossing {
        wall,
        normalizer,
        weights,
        positive_side: positive,
        wall_vars: on_wall,
        negative_side: negative,
        kind,
    }
}

/// Restricts a toric crossing to the hypersurface cut out by a general
/// member of the system, using two rules in fixed order:
///
/// 1. disjointness — a class supported on the wall with nonvanishing
///    coefficient pushes the crossing locus off the hypersurface;
/// 2. elimination — a class linear in exactly one off-wall variable (and
///    otherwise on the wall) with constant coefficient eliminates that
///    variable locally, shrinking the crossing type.
///
/// If neither applies the unrestricted data is carried through flagged
/// inconclusive.
pub fn restrict_to_hypersurface(
    wc: &WallCrossing,
    s: &LinearSystem,
) -> Result<RestrictedCrossing, GameError> {
    let g = &s.ambient;
    if g.vars().len() != wc.weights.len()
        || g.vars().iter().zip(&wc.weights).any(|(v, (w, _))| v != w)
    {
        return Err(GameError::GradingMismatch);
    }
    let base = base_pair(g)?;
    let weight_of = |i: usize| wc.weights[i].1;
    let nonzero: BTreeSet<usize> = (0..g.len()).filter(|&i| weight_of(i) != 0).collect();

    // Rule (i) applies to small crossings only: their modification loci sit
    // where every off-wall variable vanishes. A divisorial crossing touches
    // the whole contracted divisor and is never pushed off the hypersurface
    // by a wall-supported class.
    let disjoint_witness = if wc.kind == WallKind::Small {
        s.classes.iter().find(|class| {
            let on_wall = class
                .fibre
                .0
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || !nonzero.contains(&i));
            on_wall && !class_vanishes_on(class, &nonzero, base)
        })
    } else {
        None
    };

    let elimination = s.classes.iter().find_map(|class| {
        let off_wall: Vec<(usize, u32)> = class
            .fibre
            .0
            .iter()
            .enumerate()
            .filter(|(i, &e)| e > 0 && nonzero.contains(i))
            .map(|(i, &e)| (i, e))
            .collect();
        let [(w, 1)] = off_wall.as_slice() else {
            return None;
        };
        let mut residual = class.clone();
        residual.fibre.0[*w] = 0;
        let mut rest = nonzero.clone();
        rest.remove(w);
        if class_vanishes_on(&residual, &rest, base) {
            None
        } else {
            Some((*w, class.clone()))
        }
    });

    let describe = |c: &MonomialClass| c.fibre.format(g.vars());

    if let Some(witness) = disjoint_witness {
        return Ok(RestrictedCrossing {
            parent: wc.clone(),
            eliminated: None,
            result: RestrictionResult::IsomorphismDisjoint {
                witness: describe(witness),
            },
            k_sign: KSign::NotSmall,
            inconclusive: false,
        });
    }

    match wc.kind {
        WallKind::Small => {
            if let Some((w, _class)) = elimination {
                let weights: Vec<(String, i64)> = wc
                    .weights
                    .iter()
                    .enumerate()
                    .filter(|(i, (_, wt))| *wt != 0 && *i != w)
                    .map(|(_, p)| p.clone())
                    .collect();
                let sum: i64 = weights.iter().map(|(_, w)| w).sum();
                Ok(RestrictedCrossing {
                    parent: wc.clone(),
                    eliminated: Some(g.vars()[w].clone()),
                    result: RestrictionResult::RestrictedSmall { weights },
                    k_sign: sign_class(sum),
                    inconclusive: false,
                })
            } else {
                let weights: Vec<(String, i64)> = wc
                    .weights
                    .iter()
                    .filter(|(_, wt)| *wt != 0)
                    .cloned()
                    .collect();
                let sum: i64 = weights.iter().map(|(_, w)| w).sum();
                Ok(RestrictedCrossing {
                    parent: wc.clone(),
                    eliminated: None,
                    result: RestrictionResult::RestrictedSmall { weights },
                    k_sign: sign_class(sum),
                    inconclusive: true,
                })
            }
        }
        WallKind::DivisorialContracts(_) | WallKind::BoundaryDivisorial(_) => {
            Ok(RestrictedCrossing {
                parent: wc.clone(),
                eliminated: elimination.map(|(w, _)| g.vars()[w].clone()),
                result: RestrictionResult::Divisorial,
                k_sign: KSign::NotSmall,
                inconclusive: false,
            })
        }
        WallKind::BoundaryFibration => Ok(RestrictedCrossing {
            parent: wc.clone(),
            eliminated: None,
            result: RestrictionResult::Fibration,
            k_sign: KSign::NotSmall,
            inconclusive: false,
        }),
    }
}

fn sign_class(sum: i64) -> KSign {
    match sum.cmp(&0) {
        std::cmp::Ordering::Greater => KSign::Flip,
        std::cmp::Ordering::Equal => KSign::Flop,
        std::cmp::Ordering::Less => KSign::Antiflip,
    }
}

/// Mori-category check of one restricted crossing against the anticanonical
/// class of the hypersurface.
///
/// A restricted small crossing whose extracted side has at least two weights,
/// all of absolute value at least 2, introduces a locus that is singular
/// along its whole length; terminal threefold singularities are isolated, so
/// the game leaves the Mori category. A crossing at a wall parallel to the
/// anticanonical class contracts K-trivially. A disjoint crossing touches
/// nothing on the hypersurface and passes vacuously.
pub fn mori_check(rc: &RestrictedCrossing, antican: Bidegree) -> MoriCheck {
    if let RestrictionResult::IsomorphismDisjoint { .. } = rc.result {
        return MoriCheck::Ok;
    }
    if let RestrictionResult::RestrictedSmall { weights } = &rc.result {
        let extracted: Vec<i64> = weights.iter().map(|(_, w)| *w).filter(|w| *w < 0).collect();
        if extracted.len() >= 2 {
            if extracted.iter().all(|w| w.abs() >= 2) {
                return MoriCheck::Fail(MoriFailure::NonIsolatedSingularities);
            }
            if extracted.iter().any(|w| w.abs() >= 2) {
                return MoriCheck::OkWithNote(
                    "extracted side mixes unit and higher weights; isolated quotient points can be terminal"
                        .to_string(),
                );
            }
        }
    }
    if cross(rc.parent.wall.coords(), antican.coords()) == 0 {
        return MoriCheck::Fail(MoriFailure::KTrivialContraction);
    }
    MoriCheck::Ok
}

/// One step of a game trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameStep {
    pub crossing: RestrictedCrossing,
    pub mori: MoriCheck,
}

/// Description of the model at the far end of a winning game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkEnd {
    pub ray: Ray,
    pub kind: WallKind,
    pub presentation: SectionRingPresentation,
    pub ambient_weights: Vec<u32>,
    /// Image of the hypersurface, when its equation rewrites in the
    /// generators: the common generator weight and the Fano index.
    pub image: Option<ImageSummary>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageSummary {
    pub weight: u32,
    pub fano_index: i64,
}

/// Final verdict of a 2-ray game on a hypersurface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    SarkisovLink { end: Box<LinkEnd> },
    FailsMoriCategory { reason: MoriFailure, step: usize },
    KTrivialEnd { step: usize },
}

/// Whether a failing run stops at the first failure or records every wall of
/// the mobile cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceMode {
    StopAtFirstFailure,
    FullTrace,
}

/// An executed 2-ray game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameTrace {
    pub models: Vec<ToricModel>,
    pub steps: Vec<GameStep>,
    pub verdict: Verdict,
}

pub const DEFAULT_SECTION_BOUND: u32 = 12;

/// Runs the 2-ray game of the ambient space restricted to the hypersurface.
///
/// The walk starts at the fibration boundary of the model's chamber and
/// crosses every fan ray inside the mobile cone, restricting and checking
/// each step. It stops at the first failure unless a full trace is requested.
/// A clean run ends at the far ray of the mobile cone with a link whose image
/// is presented by that ray's section ring.
pub fn run_game(
    m: &ToricModel,
    s: &LinearSystem,
    mode: TraceMode,
    section_bound: u32,
) -> Result<GameTrace, GameError> {
    let g = &s.ambient;
    if *g != m.grading {
        return Err(GameError::GradingMismatch);
    }
    let fan = chamber_fan(g);
    let lo = fan.rays[0];
    if fan.vars_on_ray[0].len() < 2 {
        return Err(GameError::NoFibrationBoundary(lo));
    }
    if m.chamber.lo() != lo {
        return Err(GameError::ChamberNotAtFibration);
    }
    let mob = mobile_cone_toric(g)?;
    let antican = adjunction_anticanonical(g, s.degree);

    let mut steps = Vec::new();
    let mut models = vec![m.clone()];
    let mut first_failure: Option<(usize, MoriFailure)> = None;

    let boundary = classify_boundary(g, lo)?;
    let restricted = restrict_to_hypersurface(&boundary, s)?;
    let mori = mori_check(&restricted, antican);
    if let MoriCheck::Fail(reason) = &mori {
        first_failure = Some((0, *reason));
    }
    steps.push(GameStep {
        crossing: restricted,
        mori,
    });

    let hi_index = fan
        .rays
        .iter()
        .position(|&r| r == mob.hi())
        .expect("mobile cone ends on a fan ray");

    let mut chamber_idx = 0usize;
    for idx in 1..=hi_index {
        if first_failure.is_some() && mode == TraceMode::StopAtFirstFailure {
            break;
        }
        let wall = fan.rays[idx];
        let crossing = if idx == fan.rays.len() - 1 {
            classify_boundary(g, wall)?
        } else {
            classify_wall(g, wall, fan.chambers[chamber_idx])?
        };
        let restricted = restrict_to_hypersurface(&crossing, s)?;
        let mori = mori_check(&restricted, antican);
        if let MoriCheck::Fail(reason) = &mori {
            if first_failure.is_none() {
                first_failure = Some((steps.len(), *reason));
            }
        }
        steps.push(GameStep {
            crossing: restricted,
            mori,
        });
        if idx < hi_index {
            chamber_idx = idx;
            let stopping = first_failure.is_some() && mode == TraceMode::StopAtFirstFailure;
            if !stopping {
                models.push(model_from_chamber(g, fan.chambers[chamber_idx])?);
            }
        }
    }

    let verdict = match first_failure {
        Some((step, MoriFailure::KTrivialContraction)) => Verdict::KTrivialEnd { step },
        Some((step, reason)) => Verdict::FailsMoriCategory { reason, step },
        None => {
            let end_ray = mob.hi();
            let presentation = section_generators(g, end_ray, section_bound)?;
            let ambient = presentation.ambient_weights();
            let kind = steps
                .last()
                .expect("at least the fibration step")
                .crossing
                .parent
                .kind
                .clone();
            let (image, note) = match kind {
                WallKind::BoundaryFibration => (None, Some("link ends in a fibration".to_string())),
                _ => match rewrite_in_generators(s, &presentation) {
                    Ok(rw) => {
                        let index = wps_index(&ambient, rw.image_weight);
                        (
                            Some(ImageSummary {
                                weight: rw.image_weight,
                                fano_index: index,
                            }),
                            None,
                        )
                    }
                    Err(e) => (
                        None,
                        Some(format!(
                            "equation does not rewrite in the end generators: {e}"
                        )),
                    ),
                },
            };
            Verdict::SarkisovLink {
                end: Box::new(LinkEnd {
                    ray: end_ray,
                    kind,
                    presentation,
                    ambient_weights: ambient,
                    image,
                    note,
                }),
            }
        }
    };

    Ok(GameTrace {
        models,
        steps,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_toric::Bidegree;
    use crate::monomials::build_system;
    use crate::scenario::parse_monomial;

    fn matrix_a() -> GradingMatrix {
        GradingMatrix::new(
            ["u", "v", "x", "t", "y", "z"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(1, 0),
                Bidegree::new(0, 1),
                Bidegree::new(-2, 2),
                Bidegree::new(-2, 1),
                Bidegree::new(-4, 1),
            ],
        )
        .unwrap()
    }

    fn matrix_a_prime() -> GradingMatrix {
        GradingMatrix::new(
            ["u", "v", "x", "t", "z", "y"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(1, 0),
                Bidegree::new(0, 1),
                Bidegree::new(0, 2),
                Bidegree::new(0, 1),
                Bidegree::new(-1, 1),
            ],
        )
        .unwrap()
    }

    fn ray(x: i64, y: i64) -> Ray {
        Ray::new(x, y).unwrap()
    }

    fn system_f() -> LinearSystem {
        let a = matrix_a();
        let constraints: Vec<(crate::monomials::ExponentVector, u32)> = [
            ("x^2*y*z", 1),
            ("x*z*t", 2),
            ("x*y^2*z", 2),
            ("y*z*t", 3),
            ("y^3*z", 3),
            ("x^2*z^2", 4),
            ("x*y*z^2", 5),
            ("z^2*t", 6),
            ("y^2*z^2", 6),
            ("x*z^3", 8),
            ("y*z^3", 9),
            ("z^4", 12),
        ]
        .into_iter()
        .map(|(m, i)| (parse_monomial(m, &a).unwrap(), i))
        .collect();
        build_system(&a, Bidegree::new(-4, 4), &constraints).unwrap()
    }

    fn system_g() -> LinearSystem {
        let ap = matrix_a_prime();
        let constraints = vec![
            (parse_monomial("x^2*y^2", &ap).unwrap(), 2u32),
            (parse_monomial("x*t*y", &ap).unwrap(), 1),
            (parse_monomial("x*y^3", &ap).unwrap(), 1),
        ];
        let full = build_system(&ap, Bidegree::new(0, 4), &constraints).unwrap();
        let missing = [
            parse_monomial("x^4", &ap).unwrap(),
            parse_monomial("x^2*t", &ap).unwrap(),
            parse_monomial("x^3*y", &ap).unwrap(),
        ];
        full.without_fibres(&missing).unwrap()
    }

    fn first_model(g: &GradingMatrix) -> ToricModel {
        let fan = chamber_fan(g);
        model_from_chamber(g, fan.chambers[0]).unwrap()
    }

    #[test]
    fn boundary_classification() {
        let a = matrix_a();
        let b = classify_boundary(&a, ray(1, 0)).unwrap();
        assert_eq!(b.kind, WallKind::BoundaryFibration);
        assert_eq!(b.wall_vars, vec!["u", "v"]);
        let b = classify_boundary(&a, ray(-4, 1)).unwrap();
        assert_eq!(b.kind, WallKind::BoundaryDivisorial("z".to_string()));
        let ap = matrix_a_prime();
        let b = classify_boundary(&ap, ray(-1, 1)).unwrap();
        assert_eq!(b.kind, WallKind::BoundaryDivisorial("y".to_string()));
        assert!(matches!(
            classify_boundary(&a, ray(0, 1)),
            Err(GameError::NotExtreme(_))
        ));
    }

    #[test]
    fn wall_classification_on_the_singular_model() {
        let a = matrix_a();
        let fan = chamber_fan(&a);

        let w0 = classify_wall(&a, ray(0, 1), fan.chambers[0]).unwrap();
        assert_eq!(w0.kind, WallKind::Small);
        assert_eq!(w0.wall_vars, vec!["x"]);
        assert_eq!(w0.toric_type(), vec![1, 1, -2, -2, -4]);
        assert_eq!(w0.normalizer, UnimodularMap::identity());

        let w1 = classify_wall(&a, ray(-1, 1), fan.chambers[1]).unwrap();
        assert_eq!(w1.kind, WallKind::Small);
        assert_eq!(w1.wall_vars, vec!["t"]);
        assert_eq!(w1.toric_type(), vec![1, 1, 1, -1, -3]);
        assert_eq!(w1.normalizer.rows(), [[1, 1], [0, 1]]);

        let w2 = classify_wall(&a, ray(-2, 1), fan.chambers[2]).unwrap();
        assert_eq!(w2.kind, WallKind::DivisorialContracts("z".to_string()));
        assert_eq!(w2.normalizer.rows(), [[1, 2], [0, 1]]);

        assert!(matches!(
            classify_wall(&a, ray(-1, 1), fan.chambers[3]),
            Err(GameError::NotAdjacent(_, _))
        ));
    }

    #[test]
    fn wall_weights_are_a_relabeling_invariant_multiset() {
        let a = matrix_a();
        let shuffled = GradingMatrix::new(
            ["z", "y", "t", "x", "v", "u"].map(String::from).to_vec(),
            a.cols().iter().rev().copied().collect(),
        )
        .unwrap();
        for (g, wall_var) in [(&a, "x"), (&shuffled, "x")] {
            let fan = chamber_fan(g);
            let wc = classify_wall(g, ray(0, 1), fan.chambers[0]).unwrap();
            let mut tt = wc.toric_type();
            tt.sort_unstable();
            assert_eq!(tt, vec![-4, -2, -2, 1, 1]);
            assert_eq!(wc.wall_vars, vec![wall_var]);
        }
    }

    #[test]
    fn weights_match_the_cross_product_form() {
        let a = matrix_a();
        let fan = chamber_fan(&a);
        for (idx, &w) in fan.rays.iter().enumerate().skip(1).take(fan.rays.len() - 2) {
            let wc = classify_wall(&a, w, fan.chambers[idx - 1]).unwrap();
            for ((_, weight), col) in wc.weights.iter().zip(a.cols()) {
                assert_eq!(*weight as i128, cross(col.coords(), w.coords()));
            }
        }
    }

    #[test]
    fn unrestricted_sign_matches_the_anticanonical_pairing() {
        let a = matrix_a();
        let antican = crate::graded_toric::anticanonical_ambient(&a);
        let fan = chamber_fan(&a);
        for (wall, expected_sum) in [(ray(0, 1), -6i64), (ray(-1, 1), -1)] {
            let idx = fan.rays.iter().position(|&r| r == wall).unwrap();
            let wc = classify_wall(&a, wall, fan.chambers[idx - 1]).unwrap();
            let sum: i64 = wc.toric_type().iter().sum();
            assert_eq!(sum, expected_sum);
            assert_eq!(sum as i128, cross(antican.coords(), wall.coords()));
        }
    }

    #[test]
    fn restriction_eliminates_z_on_the_first_wall() {
        let a = matrix_a();
        let fan = chamber_fan(&a);
        let f = system_f();
        let wc = classify_wall(&a, ray(0, 1), fan.chambers[0]).unwrap();
        let rc = restrict_to_hypersurface(&wc, &f).unwrap();
        assert_eq!(rc.eliminated, Some("z".to_string()));
        assert!(!rc.inconclusive);
        match &rc.result {
            RestrictionResult::RestrictedSmall { weights } => {
                let ws: Vec<i64> = weights.iter().map(|(_, w)| *w).collect();
                assert_eq!(ws, vec![1, 1, -2, -2]);
            }
            other => panic!("expected restricted small crossing, got {other:?}"),
        }
        assert_eq!(rc.k_sign, KSign::Antiflip);
    }

    #[test]
    fn restriction_is_disjoint_on_the_second_wall() {
        let a = matrix_a();
        let fan = chamber_fan(&a);
        let f = system_f();
        let wc = classify_wall(&a, ray(-1, 1), fan.chambers[1]).unwrap();
        let rc = restrict_to_hypersurface(&wc, &f).unwrap();
        assert_eq!(
            rc.result,
            RestrictionResult::IsomorphismDisjoint {
                witness: "t^2".to_string()
            }
        );
        assert_eq!(rc.k_sign, KSign::NotSmall);
    }

    #[test]
    fn restriction_passes_through_the_divisorial_wall() {
        let a = matrix_a();
        let fan = chamber_fan(&a);
        let f = system_f();
        let wc = classify_wall(&a, ray(-2, 1), fan.chambers[2]).unwrap();
        let rc = restrict_to_hypersurface(&wc, &f).unwrap();
        assert_eq!(rc.result, RestrictionResult::Divisorial);
    }

    #[test]
    fn restriction_rule_precedence_and_exclusivity() {
        // a valid witness for either rule needs a constant coefficient, which
        // pins the class degree; the two shapes can never be valid at the
        // same system degree, so the fixed precedence (disjointness first)
        // shows up as: near-miss elimination candidates never preempt a
        // disjointness witness, and vice versa
        let g = GradingMatrix::new(
            ["u", "v", "x", "y", "z"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(1, 0),
                Bidegree::new(0, 1),
                Bidegree::new(-1, 1),
                Bidegree::new(-1, 1),
            ],
        )
        .unwrap();
        let fan = chamber_fan(&g);
        let wc = classify_wall(&g, ray(0, 1), fan.chambers[0]).unwrap();
        assert_eq!(wc.kind, WallKind::Small);

        // degree (0,2): x^2 is a disjointness witness; x*y is linear in y but
        // its coefficient has degree 1 and dies on (u=v=0), so it is not an
        // elimination witness
        let s = build_system(&g, Bidegree::new(0, 2), &[]).unwrap();
        let rc = restrict_to_hypersurface(&wc, &s).unwrap();
        assert_eq!(
            rc.result,
            RestrictionResult::IsomorphismDisjoint {
                witness: "x^2".to_string()
            }
        );
        assert_eq!(rc.eliminated, None);

        // degree (-1,2): no wall-supported class survives, and x*y now has a
        // constant coefficient, so elimination fires
        let s = build_system(&g, Bidegree::new(-1, 2), &[]).unwrap();
        let rc = restrict_to_hypersurface(&wc, &s).unwrap();
        assert_eq!(rc.eliminated, Some("y".to_string()));
        match &rc.result {
            RestrictionResult::RestrictedSmall { weights } => {
                let ws: Vec<i64> = weights.iter().map(|(_, w)| *w).collect();
                assert_eq!(ws, vec![1, 1, -1]);
            }
            other => panic!("expected restricted small crossing, got {other:?}"),
        }
        assert_eq!(rc.k_sign, KSign::Flip);
    }

    #[test]
    fn mori_check_examples() {
        let a = matrix_a();
        let fan = chamber_fan(&a);
        let f = system_f();
        let antican = Bidegree::new(-2, 1);

        let wc = classify_wall(&a, ray(0, 1), fan.chambers[0]).unwrap();
        let rc = restrict_to_hypersurface(&wc, &f).unwrap();
        assert_eq!(
            mori_check(&rc, antican),
            MoriCheck::Fail(MoriFailure::NonIsolatedSingularities)
        );

        let wc = classify_wall(&a, ray(-2, 1), fan.chambers[2]).unwrap();
        let rc = restrict_to_hypersurface(&wc, &f).unwrap();
        assert_eq!(
            mori_check(&rc, antican),
            MoriCheck::Fail(MoriFailure::KTrivialContraction)
        );

        let ap = matrix_a_prime();
        let fan = chamber_fan(&ap);
        let gg = system_g();
        let wc = classify_wall(&ap, ray(0, 1), fan.chambers[0]).unwrap();
        let rc = restrict_to_hypersurface(&wc, &gg).unwrap();
        assert_eq!(mori_check(&rc, Bidegree::new(1, 1)), MoriCheck::Ok);
    }

    #[test]
    fn game_on_the_singular_model_fails() {
        let a = matrix_a();
        let f = system_f();
        let model = first_model(&a);
        let trace = run_game(&model, &f, TraceMode::StopAtFirstFailure, 6).unwrap();
        assert_eq!(
            trace.verdict,
            Verdict::FailsMoriCategory {
                reason: MoriFailure::NonIsolatedSingularities,
                step: 1
            }
        );
        assert_eq!(trace.steps.len(), 2);

        let full = run_game(&model, &f, TraceMode::FullTrace, 6).unwrap();
        assert_eq!(full.steps.len(), 4);
        assert_eq!(
            full.verdict,
            Verdict::FailsMoriCategory {
                reason: MoriFailure::NonIsolatedSingularities,
                step: 1
            }
        );
        assert_eq!(
            full.steps[3].mori,
            MoriCheck::Fail(MoriFailure::KTrivialContraction)
        );
        assert_eq!(full.steps[3].crossing.parent.wall, ray(-2, 1));
        assert_eq!(full.models.len(), 3);
        assert_eq!(full.models[1].irrelevant_f, vec!["u", "v", "x"]);
        assert_eq!(full.models[2].irrelevant_g, vec!["y", "z"]);
    }

    #[test]
    fn game_on_the_smooth_model_links() {
        let ap = matrix_a_prime();
        let gg = system_g();
        let model = first_model(&ap);
        let trace = run_game(&model, &gg, TraceMode::StopAtFirstFailure, 6).unwrap();
        assert_eq!(trace.steps[0].crossing.result, RestrictionResult::Fibration);
        assert_eq!(
            trace.steps[1].crossing.result,
            RestrictionResult::Divisorial
        );
        assert_eq!(
            trace.steps[1].crossing.parent.kind,
            WallKind::DivisorialContracts("y".to_string())
        );
        match &trace.verdict {
            Verdict::SarkisovLink { end } => {
                assert_eq!(end.ray, ray(0, 1));
                assert_eq!(end.kind, WallKind::DivisorialContracts("y".to_string()));
                assert_eq!(end.ambient_weights, vec![1, 1, 1, 1, 2]);
                let gens: Vec<String> = end
                    .presentation
                    .generators
                    .iter()
                    .map(|(e, _)| e.format(ap.vars()))
                    .collect();
                assert_eq!(gens, vec!["x", "z", "u*y", "v*y", "t"]);
                let image = end.image.as_ref().unwrap();
                assert_eq!(image.weight, 4);
                assert_eq!(image.fano_index, 2);
            }
            other => panic!("expected a link, got {other:?}"),
        }
    }

    #[test]
    fn game_rejects_a_model_away_from_the_fibration() {
        let a = matrix_a();
        let f = system_f();
        let fan = chamber_fan(&a);
        let inner = model_from_chamber(&a, fan.chambers[1]).unwrap();
        assert!(matches!(
            run_game(&inner, &f, TraceMode::FullTrace, 6),
            Err(GameError::ChamberNotAtFibration)
        ));
    }

    #[test]
    fn toy_model_with_no_interior_walls() {
        let g = GradingMatrix::new(
            ["a", "b", "c", "d", "e"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(1, 0),
                Bidegree::new(0, 1),
                Bidegree::new(0, 1),
                Bidegree::new(0, 1),
            ],
        )
        .unwrap();
        let s = build_system(&g, Bidegree::new(0, 2), &[]).unwrap();
        let model = first_model(&g);
        let trace = run_game(&model, &s, TraceMode::FullTrace, 6).unwrap();
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(
            trace.steps[0].crossing.parent.kind,
            WallKind::BoundaryFibration
        );
        assert_eq!(
            trace.steps[1].crossing.parent.kind,
            WallKind::BoundaryFibration
        );
        assert!(matches!(trace.verdict, Verdict::SarkisovLink { .. }));
    }
}
