//! Rank-two graded Cox rings and their GIT chamber data.
//!
//! A [`GradingMatrix`] is a 2×n integer matrix with named columns; it encodes
//! the Z²-grading of a polynomial Cox ring. From it we derive the effective
//! cone, the chamber fan, irrelevant ideals of the chamber models, the
//! anticanonical classes, the mobile cone and the numeric Gorenstein test.

use crate::cones2d::{compare_rays, cross, Cone2, ConeError, ConePosition, Ray};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("need at least 3 variables, got {0}")]
    TooFewVariables(usize),
    #[error("variable list and column list differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("column of `{0}` is the zero vector")]
    ZeroColumn(String),
    #[error("columns span a non-pointed cone")]
    NotPointed,
    #[error("all columns lie on a single ray; the effective cone is degenerate")]
    SingleRay,
    #[error("the requested cone is not a chamber of the fan")]
    NotAChamber,
    #[error("the mobile cone degenerates to a single ray")]
    DegenerateMobileCone,
    #[error("hypersurface is anticanonical: adjoint class is (0,0)")]
    KTrivialHypersurface,
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// A class in the rank-two divisor class lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Bidegree {
    pub d1: i64,
    pub d2: i64,
}

impl Bidegree {
    pub fn new(d1: i64, d2: i64) -> Self {
        Bidegree { d1, d2 }
    }

    pub fn is_zero(&self) -> bool {
        self.d1 == 0 && self.d2 == 0
    }

    pub fn coords(&self) -> (i64, i64) {
        (self.d1, self.d2)
    }

    pub fn scale(&self, m: i64) -> Bidegree {
        let mul = |a: i64| a.checked_mul(m).expect("class lattice overflow");
        Bidegree::new(mul(self.d1), mul(self.d2))
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(
            self.d1.checked_add(rhs.d1).expect("class lattice overflow"),
            self.d2.checked_add(rhs.d2).expect("class lattice overflow"),
        )
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(
            self.d1.checked_sub(rhs.d1).expect("class lattice overflow"),
            self.d2.checked_sub(rhs.d2).expect("class lattice overflow"),
        )
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

/// The Z²-grading of a Cox ring: named variables with their bidegrees.
///
/// Validity requires distinct names, n ≥ 3, no zero column, and all column
/// rays spanning a strictly convex (pointed) two-dimensional cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingMatrix {
    vars: Vec<String>,
    cols: Vec<Bidegree>,
    #[serde(skip)]
    effective: Cone2,
}

impl GradingMatrix {
    pub fn new(vars: Vec<String>, cols: Vec<Bidegree>) -> Result<Self, GradingError> {
        if vars.len() != cols.len() {
            return Err(GradingError::LengthMismatch(vars.len(), cols.len()));
        }
        if vars.len() < 3 {
            return Err(GradingError::TooFewVariables(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
            if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'') {
                return Err(GradingError::InvalidVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(GradingError::DuplicateVariable(v.clone()));
            }
        }
        let mut rays: Vec<Ray> = Vec::new();
        for (v, c) in vars.iter().zip(&cols) {
            let r =
                Ray::primitivize(c.d1, c.d2).map_err(|_| GradingError::ZeroColumn(v.clone()))?;
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
        if rays.len() < 2 {
            return Err(GradingError::SingleRay);
        }
        let effective = extreme_cone(&rays).ok_or(GradingError::NotPointed)?;
        Ok(GradingMatrix {
            vars,
            cols,
            effective,
        })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn cols(&self) -> &[Bidegree] {
        &self.cols
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn col(&self, i: usize) -> Bidegree {
        self.cols[i]
    }

    /// Primitive ray of the i-th column.
    pub fn col_ray(&self, i: usize) -> Ray {
        Ray::primitivize(self.cols[i].d1, self.cols[i].d2).expect("validated at construction")
    }

    /// Cone spanned by the extreme column rays.
    pub fn effective_cone(&self) -> Cone2 {
        self.effective
    }

    /// Variables whose column lies on the clockwise-most effective ray.
    ///
    /// These play the role of the fibration coordinates; their columns carry
    /// the coefficient polynomials of the linear systems.
    pub fn base_vars(&self) -> Vec<usize> {
        let lo = self.effective.lo();
        (0..self.len()).filter(|&i| self.col_ray(i) == lo).collect()
    }

    /// Left-multiplies the grading by a unimodular map (change of lattice basis).
    pub fn transform(&self, m: &crate::cones2d::UnimodularMap) -> GradingMatrix {
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let (d1, d2) = m.apply(c.coords());
                Bidegree::new(d1, d2)
            })
            .collect();
        GradingMatrix::new(self.vars.clone(), cols).expect("unimodular image of a valid grading")
    }
}

/// Finds the extreme pair of a set of distinct primitive rays, if the set
/// spans a strictly convex cone.
fn extreme_cone(rays: &[Ray]) -> Option<Cone2> {
    for &lo in rays {
        for &hi in rays {
            if lo == hi || cross(lo.coords(), hi.coords()) <= 0 {
                continue;
            }
            let inside = rays.iter().all(|&r| {
                r == lo
                    || r == hi
                    || (cross(lo.coords(), r.coords()) > 0 && cross(r.coords(), hi.coords()) > 0)
            });
            if inside {
                return Cone2::new(lo, hi).ok();
            }
        }
    }
    None
}

/// The GIT chamber decomposition of the effective cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChamberFan {
    pub rays: Vec<Ray>,
    pub chambers: Vec<Cone2>,
    /// Variables sitting on each ray, parallel to `rays`.
    pub vars_on_ray: Vec<Vec<String>>,
}

/// A toric model: a grading plus a chosen chamber and its irrelevant ideal
/// `(F) ∩ (G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricModel {
    pub grading: GradingMatrix,
    pub chamber: Cone2,
    /// Variables with column ray at or below the chamber.
    pub irrelevant_f: Vec<String>,
    /// Variables with column ray at or above the chamber.
    pub irrelevant_g: Vec<String>,
}

impl ToricModel {
    pub fn irrelevant_ideal(&self) -> String {
        format!(
            "({}) ∩ ({})",
            self.irrelevant_f.join(","),
            self.irrelevant_g.join(",")
        )
    }
}

/// Cone spanned by the extreme primitive column rays.
pub fn effective_cone(g: &GradingMatrix) -> Cone2 {
    g.effective_cone()
}

/// Sorted distinct column rays and the consecutive chambers between them.
pub fn chamber_fan(g: &GradingMatrix) -> ChamberFan {
    let mut rays: Vec<Ray> = Vec::new();
    for i in 0..g.len() {
        let r = g.col_ray(i);
        if !rays.contains(&r) {
            rays.push(r);
        }
    }
    rays.sort_by(|a, b| compare_rays(*a, *b).expect("pointed cone rays are comparable"));
    let vars_on_ray = rays
        .iter()
        .map(|&r| {
            (0..g.len())
                .filter(|&i| g.col_ray(i) == r)
                .map(|i| g.vars()[i].clone())
                .collect()
        })
        .collect();
    let chambers = rays
        .windows(2)
        .map(|w| Cone2::new(w[0], w[1]).expect("consecutive fan rays are strictly ordered"))
        .collect();
    ChamberFan {
        rays,
        chambers,
        vars_on_ray,
    }
}

/// The model of a chamber: its irrelevant ideal pair `(F) ∩ (G)`.
pub fn model_from_chamber(g: &GradingMatrix, c: Cone2) -> Result<ToricModel, GradingError> {
    let fan = chamber_fan(g);
    if !fan.chambers.contains(&c) {
        return Err(GradingError::NotAChamber);
    }
    let mut f = Vec::new();
    let mut gg = Vec::new();
    for i in 0..g.len() {
        let r = g.col_ray(i);
        match compare_rays(r, c.lo())? {
            Ordering::Less | Ordering::Equal => f.push(g.vars()[i].clone()),
            Ordering::Greater => {
                debug_assert_ne!(compare_rays(r, c.hi())?, Ordering::Less);
                gg.push(g.vars()[i].clone());
            }
        }
    }
    Ok(ToricModel {
        grading: g.clone(),
        chamber: c,
        irrelevant_f: f,
        irrelevant_g: gg,
    })
}

/// Sum of the columns: the anticanonical class of the ambient toric variety.
pub fn anticanonical_ambient(g: &GradingMatrix) -> Bidegree {
    g.cols().iter().fold(Bidegree::new(0, 0), |acc, &c| acc + c)
}

/// Anticanonical class of a hypersurface of class `hyp`, by adjunction.
pub fn adjunction_anticanonical(g: &GradingMatrix, hyp: Bidegree) -> Bidegree {
    anticanonical_ambient(g) - hyp
}

/// The cone of mobile divisor classes of the ambient toric variety.
///
/// Walking the chamber fan from either end, the mobile cone stops at the
/// first ray whose crossing removes a divisor: a wall with exactly one
/// variable strictly beyond it. If no such wall exists on a given end the
/// mobile cone reaches the effective boundary there.
pub fn mobile_cone_toric(g: &GradingMatrix) -> Result<Cone2, GradingError> {
    let fan = chamber_fan(g);
    let counts: Vec<usize> = fan.vars_on_ray.iter().map(|v| v.len()).collect();
    let k = fan.rays.len();
    let mut hi_end = k - 1;
    for i in 1..k - 1 {
        let beyond: usize = counts[i + 1..].iter().sum();
        if beyond == 1 {
            hi_end = i;
            break;
        }
    }
    let mut lo_end = 0;
    for i in (1..k - 1).rev() {
        let below: usize = counts[..i].iter().sum();
        if below == 1 {
            lo_end = i;
            break;
        }
    }
    if lo_end >= hi_end {
        return Err(GradingError::DegenerateMobileCone);
    }
    Ok(Cone2::new(fan.rays[lo_end], fan.rays[hi_end])?)
}

/// Verdict of the K-condition: where the adjoint anticanonical class sits
/// relative to the mobile cone. `Boundary` and `Exterior` both mean the
/// condition holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KCondition {
    HoldsBoundary,
    HoldsExterior,
    FailsInterior,
}

impl KCondition {
    pub fn holds(&self) -> bool {
        !matches!(self, KCondition::FailsInterior)
    }
}

impl fmt::Display for KCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KCondition::HoldsBoundary => write!(f, "holds (boundary)"),
            KCondition::HoldsExterior => write!(f, "holds (exterior)"),
            KCondition::FailsInterior => write!(f, "fails (interior)"),
        }
    }
}

pub fn k_condition(g: &GradingMatrix, hyp: Bidegree) -> Result<KCondition, GradingError> {
    let ak = adjunction_anticanonical(g, hyp);
    if ak.is_zero() {
        return Err(GradingError::KTrivialHypersurface);
    }
    let mob = mobile_cone_toric(g)?;
    Ok(match mob.position(ak.coords())? {
        ConePosition::Interior => KCondition::FailsInterior,
        ConePosition::Boundary => KCondition::HoldsBoundary,
        ConePosition::Exterior => KCondition::HoldsExterior,
    })
}

/// The identification of mobile cones between the ambient space and a
/// hypersurface is justified only when the hypersurface class is interior to
/// the ambient mobile cone. Returns `false` when that assumption fails and a
/// warning should be attached to reports.
pub fn mobile_assumption_holds(g: &GradingMatrix, hyp: Bidegree) -> Result<bool, GradingError> {
    if hyp.is_zero() {
        return Err(GradingError::Cone(ConeError::ZeroVector));
    }
    let mob = mobile_cone_toric(g)?;
    Ok(mob.position(hyp.coords())? == ConePosition::Interior)
}

/// Outcome of the numeric Gorenstein test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gorenstein {
    Gorenstein,
    NotGorenstein,
    NotApplicable,
}

impl fmt::Display for Gorenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gorenstein::Gorenstein => write!(f, "Gorenstein"),
            Gorenstein::NotGorenstein => write!(f, "not Gorenstein"),
            Gorenstein::NotApplicable => write!(f, "not applicable"),
        }
    }
}

/// Numeric Gorenstein test for quartic models.
///
/// Applies only to gradings of the shape: exactly two columns equal to
/// `(1,0)`, exactly three columns with second degree 1, exactly one column
/// with second degree 2, and a hypersurface of second degree 4. In that case
/// the model is Gorenstein exactly when the hypersurface first degree is
/// twice the first degree of the weight-2 variable. Anything else is
/// reported as not applicable rather than guessed at.
pub fn gorenstein_check(g: &GradingMatrix, hyp: Bidegree) -> Gorenstein {
    if hyp.d2 != 4 || g.len() != 6 {
        return Gorenstein::NotApplicable;
    }
    let base: Vec<_> = g
        .cols()
        .iter()
        .filter(|c| **c == Bidegree::new(1, 0))
        .collect();
    let fibre1: Vec<_> = g.cols().iter().filter(|c| c.d2 == 1).collect();
    let fibre2: Vec<_> = g.cols().iter().filter(|c| c.d2 == 2).collect();
    if base.len() != 2 || fibre1.len() != 3 || fibre2.len() != 1 {
        return Gorenstein::NotApplicable;
    }
    if hyp.d1 == 2 * fibre2[0].d1 {
        Gorenstein::Gorenstein
    } else {
        Gorenstein::NotGorenstein
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn matrix_a() -> GradingMatrix {
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

    pub(crate) fn matrix_a_prime() -> GradingMatrix {
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

    #[test]
    fn effective_cone_examples() {
        let a = matrix_a();
        assert_eq!(
            effective_cone(&a),
            Cone2::new(ray(1, 0), ray(-4, 1)).unwrap()
        );
        let ap = matrix_a_prime();
        assert_eq!(
            effective_cone(&ap),
            Cone2::new(ray(1, 0), ray(-1, 1)).unwrap()
        );
        let two = GradingMatrix::new(
            ["a", "b", "c"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(0, 1),
                Bidegree::new(0, 2),
            ],
        )
        .unwrap();
        assert_eq!(
            effective_cone(&two),
            Cone2::new(ray(1, 0), ray(0, 1)).unwrap()
        );
    }

    #[test]
    fn non_pointed_gradings_are_rejected() {
        let bad = GradingMatrix::new(
            ["a", "b", "c"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(-1, 0),
                Bidegree::new(0, 1),
            ],
        );
        assert_eq!(bad.unwrap_err(), GradingError::NotPointed);
        let single = GradingMatrix::new(
            ["a", "b", "c"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(2, 0),
                Bidegree::new(3, 0),
            ],
        );
        assert_eq!(single.unwrap_err(), GradingError::SingleRay);
    }

    #[test]
    fn chamber_fan_examples() {
        let fan = chamber_fan(&matrix_a());
        assert_eq!(
            fan.rays,
            vec![ray(1, 0), ray(0, 1), ray(-1, 1), ray(-2, 1), ray(-4, 1)]
        );
        assert_eq!(fan.chambers.len(), 4);
        assert_eq!(fan.vars_on_ray[0], vec!["u", "v"]);
        assert_eq!(fan.vars_on_ray[2], vec!["t"]);

        let fan = chamber_fan(&matrix_a_prime());
        assert_eq!(fan.rays, vec![ray(1, 0), ray(0, 1), ray(-1, 1)]);
        assert_eq!(fan.chambers.len(), 2);
        assert_eq!(fan.vars_on_ray[1], vec!["x", "t", "z"]);

        let two_rays = GradingMatrix::new(
            ["a", "b", "c", "d"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(1, 0),
                Bidegree::new(0, 1),
                Bidegree::new(0, 1),
            ],
        )
        .unwrap();
        assert_eq!(chamber_fan(&two_rays).chambers.len(), 1);
    }

    #[test]
    fn irrelevant_ideals_of_the_three_models() {
        let a = matrix_a();
        let fan = chamber_fan(&a);
        let m0 = model_from_chamber(&a, fan.chambers[0]).unwrap();
        assert_eq!(m0.irrelevant_f, vec!["u", "v"]);
        assert_eq!(m0.irrelevant_g, vec!["x", "t", "y", "z"]);
        let m1 = model_from_chamber(&a, fan.chambers[1]).unwrap();
        assert_eq!(m1.irrelevant_f, vec!["u", "v", "x"]);
        assert_eq!(m1.irrelevant_g, vec!["t", "y", "z"]);
        let m2 = model_from_chamber(&a, fan.chambers[2]).unwrap();
        assert_eq!(m2.irrelevant_f, vec!["u", "v", "x", "t"]);
        assert_eq!(m2.irrelevant_g, vec!["y", "z"]);
        let bogus = Cone2::new(ray(1, 0), ray(-1, 1)).unwrap();
        assert_eq!(
            model_from_chamber(&a, bogus).unwrap_err(),
            GradingError::NotAChamber
        );
    }

    #[test]
    fn anticanonical_examples() {
        assert_eq!(anticanonical_ambient(&matrix_a()), Bidegree::new(-6, 5));
        assert_eq!(
            anticanonical_ambient(&matrix_a_prime()),
            Bidegree::new(1, 5)
        );
        assert_eq!(
            adjunction_anticanonical(&matrix_a(), Bidegree::new(-4, 4)),
            Bidegree::new(-2, 1)
        );
        assert_eq!(
            adjunction_anticanonical(&matrix_a_prime(), Bidegree::new(0, 4)),
            Bidegree::new(1, 1)
        );
        let a = matrix_a();
        assert_eq!(
            adjunction_anticanonical(&a, anticanonical_ambient(&a)),
            Bidegree::new(0, 0)
        );
    }

    #[test]
    fn adjunction_is_linear_in_the_hypersurface_class() {
        let a = matrix_a();
        let h1 = Bidegree::new(-4, 4);
        let h2 = Bidegree::new(3, -1);
        assert_eq!(
            adjunction_anticanonical(&a, h1 + h2),
            adjunction_anticanonical(&a, h1) - h2
        );
    }

    #[test]
    fn mobile_cone_examples() {
        assert_eq!(
            mobile_cone_toric(&matrix_a()).unwrap(),
            Cone2::new(ray(1, 0), ray(-2, 1)).unwrap()
        );
        assert_eq!(
            mobile_cone_toric(&matrix_a_prime()).unwrap(),
            Cone2::new(ray(1, 0), ray(0, 1)).unwrap()
        );
        let both_fibrations = GradingMatrix::new(
            ["a", "b", "c", "d"].map(String::from).to_vec(),
            vec![
                Bidegree::new(1, 0),
                Bidegree::new(1, 0),
                Bidegree::new(0, 1),
                Bidegree::new(0, 1),
            ],
        )
        .unwrap();
        assert_eq!(
            mobile_cone_toric(&both_fibrations).unwrap(),
            effective_cone(&both_fibrations)
        );
    }

    #[test]
    fn mobile_cone_is_contained_in_effective_cone() {
        let a = matrix_a();
        let mob = mobile_cone_toric(&a).unwrap();
        let eff = effective_cone(&a);
        for r in [mob.lo(), mob.hi()] {
            assert_ne!(eff.position(r.coords()).unwrap(), ConePosition::Exterior);
        }
    }

    #[test]
    fn k_condition_examples() {
        assert_eq!(
            k_condition(&matrix_a(), Bidegree::new(-4, 4)).unwrap(),
            KCondition::HoldsBoundary
        );
        assert_eq!(
            k_condition(&matrix_a_prime(), Bidegree::new(0, 4)).unwrap(),
            KCondition::FailsInterior
        );
        assert_eq!(
            k_condition(&matrix_a(), Bidegree::new(-6, 5)).unwrap_err(),
            GradingError::KTrivialHypersurface
        );
    }

    #[test]
    fn mobile_assumption_warning() {
        // (-4,4) is interior mobile on T; (0,4) sits on the boundary ray (0,1) of F
        assert!(mobile_assumption_holds(&matrix_a(), Bidegree::new(-4, 4)).unwrap());
        assert!(!mobile_assumption_holds(&matrix_a_prime(), Bidegree::new(0, 4)).unwrap());
    }

    #[test]
    fn gorenstein_examples() {
        assert_eq!(
            gorenstein_check(&matrix_a(), Bidegree::new(-4, 4)),
            Gorenstein::Gorenstein
        );
        // same shape, hypersurface degree not twice the weight-2 column degree
        assert_eq!(
            gorenstein_check(&matrix_a(), Bidegree::new(-6, 4)),
            Gorenstein::NotGorenstein
        );
        assert_eq!(
            gorenstein_check(&matrix_a_prime(), Bidegree::new(0, 4)),
            Gorenstein::Gorenstein
        );
        // wrong hypersurface weight
        assert_eq!(
            gorenstein_check(&matrix_a(), Bidegree::new(-4, 3)),
            Gorenstein::NotApplicable
        );
    }

    #[test]
    fn k_condition_is_invariant_under_relabeling() {
        let a = matrix_a();
        let shuffled = GradingMatrix::new(
            ["z", "y", "t", "x", "v", "u"].map(String::from).to_vec(),
            a.cols().iter().rev().copied().collect(),
        )
        .unwrap();
        assert_eq!(
            k_condition(&a, Bidegree::new(-4, 4)).unwrap(),
            k_condition(&shuffled, Bidegree::new(-4, 4)).unwrap()
        );
    }
}
