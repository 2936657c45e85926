//! Exact scalar domains.
//!
//! Three families implement [`Scalar`]:
//!
//! * [`Rational`] — arbitrary-precision rationals, the base field of every
//!   computation;
//! * [`Fp`] — integers modulo a word-sized odd prime, for cross-checks;
//! * [`ExtElem`] — elements of a simple algebraic extension `Q[t]/(m(t))`,
//!   used for irrational multipliers, shear parameters and algebraic points.
//!
//! All arithmetic is exact. Operations that may fail (inversion in a ring
//! that is not a field, conversion of a rational into a prime field) return
//! [`Result`](crate::Result).

mod ext;
mod fp;
mod rational;

pub use ext::{adjoin_over, adjoin_root, ExtElem, ExtensionField, Irreducibility, Tower};
pub use fp::Fp;
pub use rational::{format_rational, parse_rational, rat, rational_sqrt, valuation, Rational};

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};

/// An exact commutative scalar domain.
///
/// Implementors are fields, or quotient rings that behave as fields until an
/// inversion exposes a zero divisor (reported as
/// [`Error::NotInvertible`]).
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Multiplicative inverse.
    fn inv(&self) -> Result<Self>;

    /// Exact quotient `self / other`.
    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inv()?)
    }

    /// Image of a rational number; fails in characteristic p when p divides
    /// the denominator.
    fn from_rational(q: &Rational) -> Result<Self>;

    /// Image of a machine integer.
    fn from_i64(n: i64) -> Self;

    /// Characteristic of the domain (0 for the rationals and their
    /// extensions).
    fn characteristic() -> u64;

    /// The value as a rational number, when it lies in the prime field of
    /// characteristic 0.
    fn to_rational(&self) -> Option<Rational>;

    /// Determinant of a square matrix given by rows.
    ///
    /// The default is Gaussian elimination with pivoting on nonzero entries;
    /// the rational implementation overrides it with fraction-free Bareiss
    /// elimination on an integer matrix.
    fn determinant(rows: Vec<Vec<Self>>) -> Result<Self> {
        crate::linalg::det_gauss(rows)
    }

    /// Scale a nonzero vector to a canonical projective representative.
    ///
    /// The default divides by the first nonzero entry. Rationals instead
    /// clear denominators to coprime integers with a positive leading entry.
    fn normalize_projective(v: &mut [Self]) -> Result<()> {
        let Some(lead) = v.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::ZeroPoint);
        };
        let inv = lead.inv()?;
        for c in v.iter_mut() {
            *c = c.clone() * inv.clone();
        }
        Ok(())
    }

    /// `self` raised to a nonnegative integer power.
    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}
