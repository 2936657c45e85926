//! Arbitrary-precision rationals.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Convenience constructor `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"n"` or `"n/d"` (optional surrounding whitespace and sign).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::invalid(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical string form: `"n/d"`, or `"n"` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// The p-adic valuation of a nonzero rational; `None` for zero.
pub fn valuation(q: &Rational, p: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let count = |x: &BigInt| {
        let mut x = x.clone();
        let mut v = 0i64;
        loop {
            let (quot, rem) = x.div_rem(&p);
            if !rem.is_zero() {
                return v;
            }
            x = quot;
            v += 1;
        }
    };
    Some(count(q.numer()) - count(q.denom()))
}

/// The nonnegative square root of a rational square, if it is one.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

impl Scalar for Rational {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_rational(q: &Rational) -> Result<Self> {
        Ok(q.clone())
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn characteristic() -> u64 {
        0
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn determinant(rows: Vec<Vec<Self>>) -> Result<Self> {
        // Clear denominators row by row, run integer Bareiss, undo scaling.
        let mut scale = Rational::one();
        let int_rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                scale = &scale * Rational::from_integer(l.clone());
                row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
            })
            .collect();
        Ok(Rational::from_integer(crate::linalg::det_bareiss(int_rows)) / scale)
    }

    fn normalize_projective(v: &mut [Self]) -> Result<()> {
        let Some(lead) = v.iter().find(|c| !c.is_zero()) else {
            return Err(Error::ZeroPoint);
        };
        let negative = lead.is_negative();
        let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if negative {
            g = -g;
        }
        for (c, i) in v.iter_mut().zip(ints) {
            *c = Rational::from_integer(i / &g);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-3", "7/2", "-12/5"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational(" 6/-4 ").unwrap()), "-3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&rat(18, 5), 3), Some(2));
        assert_eq!(valuation(&rat(2, 9), 3), Some(-2));
        assert_eq!(valuation(&rat(0, 1), 3), None);
    }

    #[test]
    fn normalization_is_coprime_with_positive_lead() {
        let mut v = vec![rat(-1, 2), rat(3, 4), rat(0, 1)];
        Rational::normalize_projective(&mut v).unwrap();
        assert_eq!(v, vec![rat(2, 1), rat(-3, 1), rat(0, 1)]);
    }

    #[test]
    fn squares() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
    }
}
