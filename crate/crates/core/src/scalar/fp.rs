//! Prime fields of word size.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, ToPrimitive, Zero};

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// The integers modulo an odd prime `P < 2⁶¹`, stored as the canonical
/// residue in `0..P`.
///
/// Primality of `P` is the caller's responsibility; inversion of a residue
/// sharing a factor with a composite `P` reports
/// [`Error::DivisionByZero`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(P > 2 && P < (1 << 61), "modulus must be an odd prime below 2^61");

    /// Reduce a signed integer modulo `P`.
    pub fn new(v: i128) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(v.rem_euclid(P as i128) as u64)
    }

    /// The canonical residue.
    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn inv(&self) -> Result<Self> {
        // Extended Euclid on (value, P).
        let (mut r0, mut r1) = (P as i128, self.0 as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 != 1 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(t0))
    }

    fn from_rational(q: &Rational) -> Result<Self> {
        let p = BigInt::from(P);
        let reduce = |x: &BigInt| Self::new(x.mod_floor(&p).to_i128().expect("residue fits"));
        let den = reduce(q.denom());
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduce(q.numer()) * den.inv()?)
    }

    fn from_i64(n: i64) -> Self {
        Self::new(n as i128)
    }

    fn characteristic() -> u64 {
        P
    }

    fn to_rational(&self) -> Option<Rational> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type F7 = Fp<7>;

    #[test]
    fn inverse_and_rational_image() {
        for v in 1..7 {
            let x = F7::new(v);
            assert_eq!(x * x.inv().unwrap(), F7::one());
        }
        assert_eq!(F7::from_rational(&rat(1, 2)).unwrap(), F7::new(4));
        assert!(F7::from_rational(&rat(1, 7)).is_err());
        assert!(F7::zero().inv().is_err());
    }
}
