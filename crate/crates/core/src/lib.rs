//! Exact invariants of rational self-maps of the projective line.
//!
//! The crate computes, in exact arithmetic, the data attached to a rational
//! map `φ = [F_a, F_b]` of degree `d` on `P¹`:
//!
//! * resultants, gcds and small factorizations of binary forms ([`poly`]);
//! * conjugation, iteration and multipliers ([`ratmap`]);
//! * periodic-point forms `Φₙ`, formal-period forms `Φₙ*` and their degrees
//!   `νₙ` ([`dynatomic`]);
//! * multiplier spectra `σᵢ⁽ⁿ⁾` as characteristic polynomials on the
//!   quotient algebra of `Φₙ*` ([`spectrum`]);
//! * the degree-2 moduli coordinates `(σ₁, σ₂)`, their inverse and
//!   good-reduction representatives ([`milnor2`]);
//! * GIT stability of points of `P^{2d+1}` and the boundary of the stable
//!   completion in degree 2 ([`git`]).

pub mod dynatomic;
pub mod error;
pub mod git;
pub mod linalg;
pub mod milnor2;
pub mod poly;
pub mod random;
pub mod ratmap;
pub mod scalar;
pub mod spectrum;

pub use error::{Error, Result};
pub use scalar::{ExtElem, Rational, Scalar};
