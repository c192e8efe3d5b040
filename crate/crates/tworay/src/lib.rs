//! Analysis toolkit for hypersurfaces inside rank-two toric fourfolds.
//!
//! The library works with a polynomial Cox ring carrying a Z²-grading given by
//! a 2×n integer matrix. On top of that it provides:
//!
//! - exact ray/cone arithmetic in the rank-two class lattice ([`cones2d`]),
//! - GIT chamber decompositions, irrelevant ideals, effective and mobile
//!   cones, anticanonical classes and the Gorenstein test ([`graded_toric`]),
//! - monomial bases of graded pieces, constrained linear systems, base loci,
//!   smoothness certificates, local charts and fibrewise transforms
//!   ([`monomials`]),
//! - the 2-ray game with restriction rules and Mori-category verdicts
//!   ([`game`]),
//! - section rings of boundary rays and rewriting of equations in their
//!   generators ([`sectionring`]),
//! - a line-oriented scenario file format with two bundled example models
//!   ([`scenario`]).
//!
//! All arithmetic is exact integer arithmetic; there is no floating point
//! anywhere in the crate. Every value is immutable plain data and every
//! operation is pure, so the whole API is safe for concurrent use.
//!
//! ```
//! use tworay::game::{run_game, TraceMode, Verdict};
//! use tworay::scenario::{Scenario, BUILTIN_X_PRIME};
//!
//! let scenario = Scenario::parse(BUILTIN_X_PRIME)?;
//! let system = scenario.system()?.expect("bundled scenario has a hypersurface");
//! let trace = run_game(&scenario.model(), &system, TraceMode::StopAtFirstFailure, 12)?;
//! assert!(matches!(trace.verdict, Verdict::SarkisovLink { .. }));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cones2d;
pub mod game;
pub mod graded_toric;
pub mod monomials;
pub mod scenario;
pub mod sectionring;

pub use cones2d::{Cone2, ConePosition, Ray, UnimodularMap};
pub use graded_toric::{Bidegree, ChamberFan, GradingMatrix, ToricModel};
pub use monomials::{ExponentVector, LinearSystem, MonomialClass, Stratum};
