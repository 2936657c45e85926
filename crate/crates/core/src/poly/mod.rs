//! Dense univariate polynomials and homogeneous binary forms.
//!
//! [`Poly`] stores coefficients constant term first; [`BinaryForm`] stores
//! the coefficients `a₀ … a_d` of `Σ aᵢ X^{d−i} Yⁱ`, i.e. highest power of
//! `X` first. The two are related by dehomogenization `z = X/Y`, under which
//! `aᵢ` becomes the coefficient of `z^{d−i}`.

mod factor;
mod form;
mod modp;

pub use factor::{factor_rational, squarefree_decomposition, Factorization, MAX_FACTOR_DEGREE};
pub use form::{resultant_univariate, BinaryForm};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational, Scalar};

/// A dense univariate polynomial, constant term first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and [`Poly::degree`] returns `None` for it.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    /// Build from coefficients (constant first), trimming trailing zeros.
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `c·z^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        let mut v = vec![S::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// The polynomial `z`.
    pub fn x() -> Self {
        Self::monomial(S::one(), 1)
    }

    /// Build from small integers, constant first.
    pub fn from_i64s(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&c| S::from_i64(c)).collect())
    }

    /// Coefficients, constant term first, without trailing zeros.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Apply a coefficient map into another scalar domain.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Fallible coefficient map.
    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Poly<T>> {
        Ok(Poly::new(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * S::from_i64(i as i64)).collect())
    }

    /// `self ∘ inner`, i.e. `self(inner(z))`, by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// The shifted polynomial `self(z + c)`.
    pub fn taylor_shift(&self, c: &S) -> Self {
        self.compose(&Self::new(vec![c.clone(), S::one()]))
    }

    /// `self^e`.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(S::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        Ok(self.scale(&self.lc().inv()?))
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lc().inv()?;
        let mut r = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if n < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![S::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = r[k + dd].clone() * inv.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Remainder of Euclidean division.
    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact quotient; errors with [`Error::InexactDivision`] on a remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y)?;
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::constant(S::one()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(S::one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let inv = r0.lc().inv()?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Inverse of `self` modulo `m`.
    ///
    /// When `gcd(self, m)` is nontrivial the error carries that factor (if
    /// its coefficients are rational) so callers can split the modulus.
    pub fn inv_mod(&self, m: &Self) -> Result<Self> {
        let a = self.rem(m)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = Self::ext_gcd(&a, m)?;
        if g.degree() != Some(0) {
            return Err(match g.try_map(|c| c.to_rational().ok_or(Error::NotRational)) {
                Ok(factor) => Error::NotInvertible { factor },
                Err(_) => Error::DivisionByZero,
            });
        }
        s.rem(m)
    }

    /// Whether `gcd(self, self′)` is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        Ok(Self::gcd(self, &self.derivative())?.degree() == Some(0))
    }
}

impl Poly<Rational> {
    /// Content and primitive integer part: `self = content · primitive`,
    /// with the primitive part's leading coefficient positive.
    pub fn primitive_integer(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    /// Polynomial with the given integer coefficients.
    pub fn from_integers(v: &[BigInt]) -> Self {
        Self::new(v.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// Whether all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, o: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, o: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, o: &Poly<S>) -> Poly<S> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, o: Poly<S>) -> Poly<S> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        Ok(())
    }
}

/// Rational polynomial from a coefficient list in string form, constant
/// first. Convenient in tests and examples.
pub fn qpoly(coeffs: &[i64]) -> Poly<Rational> {
    Poly::from_i64s(coeffs)
}

/// Render a rational polynomial's coefficients as canonical strings.
pub fn rational_coeff_strings(p: &Poly<Rational>) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn division_and_gcd() {
        // (z³ − 1) = (z − 1)(z² + z + 1)
        let f = qpoly(&[-1, 0, 0, 1]);
        let g = qpoly(&[-1, 1]);
        assert_eq!(f.exact_div(&g).unwrap(), qpoly(&[1, 1, 1]));
        assert_eq!(qpoly(&[1, 0, 1]).exact_div(&g), Err(Error::InexactDivision));
        let h = qpoly(&[-1, 0, 1]);
        assert_eq!(Poly::gcd(&f, &h).unwrap(), g);
    }

    #[test]
    fn inverse_modulo_reports_common_factor() {
        let m = qpoly(&[-1, 0, 1]);
        let err = qpoly(&[-1, 1]).inv_mod(&m).unwrap_err();
        assert_eq!(err, Error::NotInvertible { factor: qpoly(&[-1, 1]) });
        let inv = qpoly(&[2, 1]).inv_mod(&m).unwrap();
        assert_eq!((&inv * &qpoly(&[2, 1])).rem(&m).unwrap(), qpoly(&[1]));
    }

    #[test]
    fn primitive_part() {
        let p = Poly::new(vec![rat(1, 2), rat(-3, 4)]);
        let (c, v) = p.primitive_integer();
        assert_eq!(c, rat(-1, 4));
        assert_eq!(v, vec![BigInt::from(-2), BigInt::from(3)]);
    }

    #[test]
    fn shift_and_compose() {
        let p = qpoly(&[0, 0, 1]);
        assert_eq!(p.taylor_shift(&rat(1, 1)), qpoly(&[1, 2, 1]));
        assert_eq!(p.compose(&qpoly(&[-1, 0, 1])), qpoly(&[1, 0, -2, 0, 1]));
    }
}
