//! Exact arithmetic for rays and convex cones in the rank-two class lattice.
//!
//! Rays are stored primitive (gcd of the coordinates is 1) and cones are
//! ordered pairs of rays spanning strictly less than a half plane. Products
//! are widened to `i128`, so every test in this module is exact.

use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("the zero vector does not span a ray")]
    ZeroVector,
    #[error("({0}, {1}) is not primitive")]
    NotPrimitive(i64, i64),
    #[error("rays {0} and {1} span a half plane or more")]
    HalfPlane(Ray, Ray),
    #[error("cone <{0}, {1}> is not strictly convex")]
    NotConvex(Ray, Ray),
    #[error("matrix has determinant {0}, expected +1")]
    BadDeterminant(i64),
    #[error("orientation ray {0} is parallel to the wall {1}")]
    ParallelOrientation(Ray, Ray),
    #[error("orientation ray {0} lies on the non-positive side of the wall {1}")]
    WrongSide(Ray, Ray),
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Cross product `a.x * b.y - a.y * b.x` of two lattice vectors, exact.
pub fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

/// A primitive lattice direction in Z².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Ray {
    x: i64,
    y: i64,
}

impl Ray {
    /// Builds a ray from coordinates that are already primitive.
    pub fn new(x: i64, y: i64) -> Result<Self, ConeError> {
        if (x, y) == (0, 0) {
            return Err(ConeError::ZeroVector);
        }
        if gcd(x, y) != 1 {
            return Err(ConeError::NotPrimitive(x, y));
        }
        Ok(Ray { x, y })
    }

    /// Divides out the gcd, keeping the direction.
    pub fn primitivize(x: i64, y: i64) -> Result<Self, ConeError> {
        if (x, y) == (0, 0) {
            return Err(ConeError::ZeroVector);
        }
        let g = gcd(x, y);
        Ok(Ray { x: x / g, y: y / g })
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn coords(&self) -> (i64, i64) {
        (self.x, self.y)
    }

    pub fn opposite(&self) -> Ray {
        Ray {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Counterclockwise comparison of two rays.
///
/// `a` comes before `b` exactly when `cross(a, b) > 0`. This is a total order
/// on any set of rays spanning strictly less than a half plane (in particular
/// on the column rays of a valid grading). Opposite rays are incomparable.
pub fn compare_rays(a: Ray, b: Ray) -> Result<Ordering, ConeError> {
    if a == b {
        return Ok(Ordering::Equal);
    }
    match cross(a.coords(), b.coords()) {
        c if c > 0 => Ok(Ordering::Less),
        c if c < 0 => Ok(Ordering::Greater),
        _ => Err(ConeError::HalfPlane(a, b)),
    }
}

/// Where a lattice vector sits relative to a cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConePosition {
    Interior,
    Boundary,
    Exterior,
}

impl fmt::Display for ConePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConePosition::Interior => write!(f, "interior"),
            ConePosition::Boundary => write!(f, "boundary"),
            ConePosition::Exterior => write!(f, "exterior"),
        }
    }
}

/// A strictly convex cone `<lo, hi>`, counterclockwise ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cone2 {
    lo: Ray,
    hi: Ray,
}

impl Cone2 {
    pub fn new(lo: Ray, hi: Ray) -> Result<Self, ConeError> {
        if cross(lo.coords(), hi.coords()) <= 0 {
            return Err(ConeError::NotConvex(lo, hi));
        }
        Ok(Cone2 { lo, hi })
    }

    pub fn lo(&self) -> Ray {
        self.lo
    }

    pub fn hi(&self) -> Ray {
        self.hi
    }

    /// Classifies a nonzero lattice vector against the cone.
    pub fn position(&self, d: (i64, i64)) -> Result<ConePosition, ConeError> {
        if d == (0, 0) {
            return Err(ConeError::ZeroVector);
        }
        let lo_d = cross(self.lo.coords(), d);
        let d_hi = cross(d, self.hi.coords());
        Ok(if lo_d > 0 && d_hi > 0 {
            ConePosition::Interior
        } else if (lo_d == 0 && d_hi > 0) || (lo_d > 0 && d_hi == 0) {
            ConePosition::Boundary
        } else {
            ConePosition::Exterior
        })
    }
}

impl fmt::Display for Cone2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.lo, self.hi)
    }
}

/// A 2×2 integer matrix of determinant +1, acting on the class lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnimodularMap {
    rows: [[i64; 2]; 2],
}

impl UnimodularMap {
    pub fn new(rows: [[i64; 2]; 2]) -> Result<Self, ConeError> {
        let det = rows[0][0] as i128 * rows[1][1] as i128 - rows[0][1] as i128 * rows[1][0] as i128;
        if det != 1 {
            return Err(ConeError::BadDeterminant(
                det.try_into().unwrap_or(i64::MAX),
            ));
        }
        Ok(UnimodularMap { rows })
    }

    pub fn identity() -> Self {
        UnimodularMap {
            rows: [[1, 0], [0, 1]],
        }
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        self.rows
    }

    pub fn apply(&self, v: (i64, i64)) -> (i64, i64) {
        let x = self.rows[0][0] as i128 * v.0 as i128 + self.rows[0][1] as i128 * v.1 as i128;
        let y = self.rows[1][0] as i128 * v.0 as i128 + self.rows[1][1] as i128 * v.1 as i128;
        (
            x.try_into().expect("lattice coordinate overflow"),
            y.try_into().expect("lattice coordinate overflow"),
        )
    }

    pub fn apply_ray(&self, r: Ray) -> Ray {
        let (x, y) = self.apply(r.coords());
        // the image of a primitive vector under a unimodular map is primitive
        Ray { x, y }
    }

    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        let a = self.rows;
        let b = other.rows;
        let mut rows = [[0i64; 2]; 2];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let v = a[i][0] as i128 * b[0][j] as i128 + a[i][1] as i128 * b[1][j] as i128;
                *entry = v.try_into().expect("matrix entry overflow");
            }
        }
        UnimodularMap { rows }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let [[a, b], [c, d]] = self.rows;
        UnimodularMap {
            rows: [[d, -b], [-c, a]],
        }
    }
}

impl fmt::Display for UnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.rows[0][0], self.rows[0][1], self.rows[1][0], self.rows[1][1]
        )
    }
}

/// Normalizes a wall ray to vertical position.
///
/// Returns the unique canonical `M` with `det M = +1`, `M·w = (0,1)` and
/// `M·orient` having positive first coordinate. `orient` picks the side of
/// the wall that becomes positive; it must lie strictly on the clockwise side
/// of `w` (`cross(orient, w) > 0`). The row-two freedom is resolved by
/// Euclidean reduction: the first entry of the second row is the smallest
/// nonnegative representative modulo `|w.y|` (its second entry when
/// `w.y = 0`), which reproduces the shear matrices `[[1,1],[0,1]]` and
/// `[[1,2],[0,1]]` used on the walls `(-1,1)` and `(-2,1)`.
pub fn normalize_wall(w: Ray, orient: Ray) -> Result<UnimodularMap, ConeError> {
    let side = cross(orient.coords(), w.coords());
    if side == 0 {
        return Err(ConeError::ParallelOrientation(orient, w));
    }
    if side < 0 {
        return Err(ConeError::WrongSide(orient, w));
    }
    let row1 = [w.y, -w.x];
    let row2 = if w.y != 0 {
        // c*w.x + d*w.y = 1 with c reduced into [0, |w.y|)
        let (c0, _) = bezout(w.x, w.y);
        let c = c0.rem_euclid(w.y.abs());
        let d = (1 - c as i128 * w.x as i128) / w.y as i128;
        [c, d.try_into().expect("matrix entry overflow")]
    } else {
        // w = (±1, 0)
        [w.x, 0]
    };
    let m = UnimodularMap { rows: [row1, row2] };
    debug_assert_eq!(m.apply(w.coords()), (0, 1));
    debug_assert!(m.apply(orient.coords()).0 > 0);
    Ok(m)
}

/// Extended gcd: returns `(c, d)` with `c*a + d*b = gcd(a, b)`.
fn bezout(a: i64, b: i64) -> (i64, i64) {
    if b == 0 {
        return (a.signum(), 0);
    }
    let (c, d) = bezout(b, a % b);
    (d, c - (a / b) * d)
}
