//! Homogeneous binary forms `F(X, Y) = Σ aᵢ X^{d−i} Yⁱ`.

use std::fmt;

use super::factor::{factor_rational, Factorization};
use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// A homogeneous form of declared degree `d` in `X, Y`.
///
/// The coefficient vector `a₀ … a_d` always has length `d + 1`; leading or
/// trailing zeros are meaningful (they record roots at `[1:0]` and `[0:1]`).
#[derive(Clone, PartialEq, Debug)]
pub struct BinaryForm<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> BinaryForm<S> {
    /// Form with coefficients `a₀ … a_d`; the degree is `len − 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    /// Form from small integers.
    pub fn from_i64s(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&c| S::from_i64(c)).collect())
    }

    /// The zero form of degree `d`.
    pub fn zero(d: usize) -> Self {
        Self::new(vec![S::zero(); d + 1])
    }

    /// Declared degree.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients `a₀ … a_d`.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient `aᵢ` of `X^{d−i} Yⁱ`.
    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The affine polynomial `F(z, 1)`.
    pub fn dehomogenize(&self) -> Poly<S> {
        Poly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// The form of degree `d` whose dehomogenization is `p`.
    pub fn homogenize(p: &Poly<S>, d: usize) -> Result<Self> {
        if p.degree().is_some_and(|e| e > d) {
            return Err(Error::invalid(format!("polynomial degree exceeds declared degree {d}")));
        }
        Ok(Self::new((0..=d).map(|i| p.coeff(d - i)).collect()))
    }

    /// The polynomial `F(1, w)` in the chart around `[1:0]`.
    pub fn dehomogenize_at_infinity(&self) -> Poly<S> {
        Poly::new(self.coeffs.clone())
    }

    /// Number of leading zero coefficients, i.e. the power of `Y` dividing
    /// a nonzero form.
    pub fn y_power(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Evaluate at a pair `(x, y)`.
    pub fn eval(&self, x: &S, y: &S) -> S {
        // Σ aᵢ x^{d−i} yⁱ by a homogeneous Horner scheme.
        let mut acc = S::zero();
        let mut ypow = S::one();
        let d = self.degree();
        let mut xpows = vec![S::one(); d + 1];
        for k in 1..=d {
            xpows[k] = xpows[k - 1].clone() * x.clone();
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            acc = acc + a.clone() * xpows[d - i].clone() * ypow.clone();
            ypow = ypow * y.clone();
        }
        acc
    }

    /// Product of forms (degrees add).
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![S::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// Sum of forms of equal degree.
    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree(), o.degree(), "adding forms of different degree");
        Self::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    /// Difference of forms of equal degree.
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-S::one()))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `X · F` (degree + 1).
    pub fn times_x(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.push(S::zero());
        Self::new(v)
    }

    /// `Y · F` (degree + 1).
    pub fn times_y(&self) -> Self {
        let mut v = vec![S::zero()];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// `F(G_a, G_b)` for forms `G_a, G_b` of a common degree `e`; the result
    /// has degree `d·e`.
    pub fn compose_forms(&self, ga: &Self, gb: &Self) -> Self {
        let d = self.degree();
        let e = ga.degree();
        assert_eq!(e, gb.degree(), "composition needs forms of equal degree");
        let mut pa = vec![Self::new(vec![S::one()])];
        let mut pb = vec![Self::new(vec![S::one()])];
        for k in 1..=d {
            pa.push(pa[k - 1].mul(ga));
            pb.push(pb[k - 1].mul(gb));
        }
        let mut acc = Self::zero(d * e);
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc = acc.add(&pa[d - i].mul(&pb[i]).scale(a));
            }
        }
        acc
    }

    /// The linear substitution `F(αX + βY, γX + δY)`.
    pub fn substitute_linear(&self, alpha: &S, beta: &S, gamma: &S, delta: &S) -> Self {
        let first = Self::new(vec![alpha.clone(), beta.clone()]);
        let second = Self::new(vec![gamma.clone(), delta.clone()]);
        self.compose_forms(&first, &second)
    }

    /// Multiplicity of the point `[x:y]` as a root of the form: the largest
    /// `m` with `(yX − xY)^m | F`. Returns `d + 1` for the zero form.
    pub fn multiplicity_at(&self, x: &S, y: &S) -> usize {
        if self.is_zero() {
            return self.degree() + 1;
        }
        if y.is_zero() {
            return self.y_power();
        }
        let c = x.clone() * y.inv().expect("nonzero y is invertible");
        let shifted = self.dehomogenize().taylor_shift(&c);
        shifted.coeffs().iter().take_while(|a| a.is_zero()).count()
    }

    /// Normalize to a canonical scalar multiple (see
    /// [`Scalar::normalize_projective`]); the zero form is left unchanged.
    pub fn normalized(&self) -> Self {
        let mut v = self.coeffs.clone();
        if S::normalize_projective(&mut v).is_ok() {
            Self::new(v)
        } else {
            self.clone()
        }
    }

    /// Greatest common divisor, normalized; the zero form if both vanish.
    pub fn gcd(f: &Self, g: &Self) -> Result<Self> {
        if f.is_zero() {
            return Ok(g.normalized());
        }
        if g.is_zero() {
            return Ok(f.normalized());
        }
        let ypow = f.y_power().min(g.y_power());
        let h = Poly::gcd(&f.dehomogenize(), &g.dehomogenize())?;
        let deg = h.degree().unwrap_or(0) + ypow;
        Ok(Self::homogenize(&h, deg)?.normalized())
    }

    /// Exact quotient `F / G`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (d, e) = (self.degree(), g.degree());
        if e > d {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero(d - e));
        }
        if self.y_power() < g.y_power() {
            return Err(Error::InexactDivision);
        }
        let q = self.dehomogenize().exact_div(&g.dehomogenize())?;
        Self::homogenize(&q, d - e).map_err(|_| Error::InexactDivision)
    }

    /// Whether the form has no repeated linear factor over the algebraic
    /// closure (the zero form is not squarefree).
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        let f = self.dehomogenize();
        let affine_ok = match f.degree() {
            Some(0) => true,
            _ => f.is_squarefree()?,
        };
        Ok(affine_ok && self.y_power() <= 1)
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let f = self.dehomogenize();
        let core = if f.degree() == Some(0) {
            Poly::constant(S::one())
        } else {
            f.exact_div(&Poly::gcd(&f, &f.derivative())?)?
        };
        let deg = core.degree().unwrap_or(0) + usize::from(self.y_power() > 0);
        Ok(Self::homogenize(&core, deg)?.normalized())
    }
}

impl BinaryForm<Rational> {
    /// Factor over the rationals into irreducible forms with exponents.
    ///
    /// A power of `Y` (root at `[1:0]`) is reported as the factor `Y`.
    /// The product of the factors, with exponents, times the returned unit
    /// reproduces the input.
    pub fn factor(&self) -> Result<(Rational, Vec<(Self, u32)>)> {
        if self.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let ypow = self.y_power();
        let Factorization { unit, factors } = factor_rational(&self.dehomogenize())?;
        let mut out = Vec::new();
        if ypow > 0 {
            out.push((Self::from_i64s(&[0, 1]), ypow as u32));
        }
        for (p, e) in factors {
            let d = p.degree().unwrap_or(0);
            out.push((Self::homogenize(&p, d)?, e));
        }
        Ok((unit, out))
    }
}

/// Resultant of two forms with their declared degrees: the determinant of
/// the Sylvester matrix built from `a₀ … a_d` and `b₀ … b_e`, rows of `F`
/// first.
pub fn resultant<S: Scalar>(f: &BinaryForm<S>, g: &BinaryForm<S>) -> Result<S> {
    let (d, e) = (f.degree(), g.degree());
    let n = d + e;
    if n == 0 {
        return Ok(S::one());
    }
    let mut rows = Vec::with_capacity(n);
    for shift in 0..e {
        let mut row = vec![S::zero(); n];
        for (j, c) in f.coeffs().iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..d {
        let mut row = vec![S::zero(); n];
        for (j, c) in g.coeffs().iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    S::determinant(rows)
}

/// Resultant of two univariate polynomials taken at their actual degrees,
/// so that `Res(f, g) = lc(f)^{deg g} · Π_{f(α)=0} g(α)`.
pub fn resultant_univariate<S: Scalar>(f: &Poly<S>, g: &Poly<S>) -> Result<S> {
    let (Some(d), Some(e)) = (f.degree(), g.degree()) else {
        return Ok(S::zero());
    };
    resultant(&BinaryForm::homogenize(f, d)?, &BinaryForm::homogenize(g, e)?)
}

impl<S: Scalar> BinaryForm<S> {
    /// Resultant `Res(self, other)` at the declared degrees.
    pub fn resultant(&self, other: &Self) -> Result<S> {
        resultant(self, other)
    }
}

impl<S: Scalar> fmt::Display for BinaryForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match d - i {
                0 => {}
                1 => write!(f, "*X")?,
                k => write!(f, "*X^{k}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "*Y")?,
                k => write!(f, "*Y^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type F = BinaryForm<Rational>;

    #[test]
    fn resultant_examples() {
        assert_eq!(F::from_i64s(&[1, 0, 0]).resultant(&F::from_i64s(&[0, 0, 1])).unwrap(), rat(1, 1));
        // z + 1/z
        assert_eq!(F::from_i64s(&[1, 0, 1]).resultant(&F::from_i64s(&[0, 1, 0])).unwrap(), rat(1, 1));
        let (m1, m2) = (rat(2, 3), rat(-5, 7));
        let f = F::new(vec![rat(1, 1), m1.clone(), rat(0, 1)]);
        let g = F::new(vec![rat(0, 1), m2.clone(), rat(1, 1)]);
        assert_eq!(f.resultant(&g).unwrap(), rat(1, 1) - m1 * m2);
    }

    #[test]
    fn multiplicities() {
        let one = rat(1, 1);
        let zero = rat(0, 1);
        assert_eq!(F::from_i64s(&[1, -1, 0]).times_y().multiplicity_at(&one, &one), 1);
        assert_eq!(F::from_i64s(&[0, 0, 0, 1]).multiplicity_at(&one, &zero), 3);
        assert_eq!(F::from_i64s(&[0, 1, 0, 0]).multiplicity_at(&zero, &one), 2);
        assert_eq!(F::zero(2).multiplicity_at(&zero, &one), 3);
    }

    #[test]
    fn gcd_div_factor() {
        let f = F::from_i64s(&[1, -1, 0]);
        let g = F::from_i64s(&[1, 0, -1]);
        assert_eq!(F::gcd(&f, &g).unwrap(), F::from_i64s(&[1, -1]));
        let q = F::from_i64s(&[1, 0, 0, -1]).exact_div(&F::from_i64s(&[1, -1])).unwrap();
        assert_eq!(q, F::from_i64s(&[1, 1, 1]));
        let (unit, fs) = F::from_i64s(&[0, 0, 1, -1, 0]).factor().unwrap();
        assert_eq!(unit, rat(1, 1));
        let mut got: Vec<_> = fs.iter().map(|(p, e)| (p.coeffs().to_vec(), *e)).collect();
        got.sort_by_key(|(c, _)| format!("{c:?}"));
        let mut want = vec![
            (F::from_i64s(&[0, 1]).coeffs().to_vec(), 2),
            (F::from_i64s(&[1, 0]).coeffs().to_vec(), 1),
            (F::from_i64s(&[1, -1]).coeffs().to_vec(), 1),
        ];
        want.sort_by_key(|(c, _)| format!("{c:?}"));
        assert_eq!(got, want);
    }

    #[test]
    fn linear_substitution() {
        // (X + Y)² with X ↦ Y, Y ↦ X is unchanged.
        let f = F::from_i64s(&[1, 2, 1]);
        let z = rat(0, 1);
        let o = rat(1, 1);
        assert_eq!(f.substitute_linear(&z, &o, &o, &z), f);
        assert!(!F::from_i64s(&[0, 0, 1]).is_squarefree().unwrap());
        assert!(F::from_i64s(&[0, 1, 0]).is_squarefree().unwrap());
    }
}
