//! Simple algebraic extensions `Q[t]/(m(t))`.
//!
//! An [`ExtElem`] is a polynomial in `t` reduced modulo the monic modulus
//! of its [`ExtensionField`]. Elements created from rationals carry no
//! field ("unbound") and combine freely with elements of any field, so
//! generic code can mix constants with algebraic numbers.
//!
//! Nested extensions are flattened with a primitive element ([`Tower`]),
//! keeping a single modulus throughout.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Zero};

use super::{format_rational, valuation, Rational, Scalar};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{factor_rational, resultant_univariate, Poly, MAX_FACTOR_DEGREE};

/// Whether a modulus is known to be irreducible over the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Yes,
    No,
    Unknown,
}

/// The ring `Q[t]/(m(t))` for a monic squarefree `m`.
///
/// When `m` is reducible the ring is a product of fields; arithmetic still
/// works until an inversion meets a zero divisor, which is reported as
/// [`Error::NotInvertible`] together with a factor of `m`.
#[derive(Debug, PartialEq)]
pub struct ExtensionField {
    modulus: Poly<Rational>,
    irreducible: Irreducibility,
}

impl ExtensionField {
    /// The ring defined by `modulus` (made monic). Fails with
    /// [`Error::NotSquarefree`] on a repeated factor.
    pub fn new(modulus: &Poly<Rational>) -> Result<Arc<Self>> {
        let m = modulus.monic()?;
        let Some(deg) = m.degree().filter(|&d| d >= 1) else {
            return Err(Error::invalid("extension modulus must have degree at least 1"));
        };
        if !m.is_squarefree()? {
            return Err(Error::NotSquarefree);
        }
        let irreducible = if deg == 1 {
            Irreducibility::Yes
        } else if deg <= MAX_FACTOR_DEGREE {
            if factor_rational(&m)?.factors.len() == 1 {
                Irreducibility::Yes
            } else {
                Irreducibility::No
            }
        } else {
            Irreducibility::Unknown
        };
        Ok(Arc::new(ExtensionField { modulus: m, irreducible }))
    }

    /// The monic modulus.
    pub fn modulus(&self) -> &Poly<Rational> {
        &self.modulus
    }

    /// Degree of the modulus.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// Irreducibility of the modulus.
    pub fn irreducible(&self) -> Irreducibility {
        self.irreducible
    }

    /// The class of `t`.
    pub fn generator(self: &Arc<Self>) -> ExtElem {
        self.element(Poly::x())
    }

    /// The class of a rational polynomial in `t`.
    pub fn element(self: &Arc<Self>, p: Poly<Rational>) -> ExtElem {
        let reduced = p.rem(&self.modulus).expect("modulus is nonzero");
        ExtElem { field: Some(self.clone()), poly: reduced }
    }
}

/// An element of an [`ExtensionField`], or a bare rational.
#[derive(Clone, Debug)]
pub struct ExtElem {
    field: Option<Arc<ExtensionField>>,
    poly: Poly<Rational>,
}

impl ExtElem {
    /// A rational constant (not tied to any field).
    pub fn rational(q: Rational) -> Self {
        ExtElem { field: None, poly: Poly::constant(q) }
    }

    /// The field this element lives in, if any.
    pub fn field(&self) -> Option<&Arc<ExtensionField>> {
        self.field.as_ref()
    }

    /// The reduced representative as a polynomial in `t`.
    pub fn poly(&self) -> &Poly<Rational> {
        &self.poly
    }

    /// Whether the element is a rational number.
    pub fn is_rational(&self) -> bool {
        self.poly.degree().unwrap_or(0) == 0
    }

    /// Substitute an image for the generator: the element `p(t)` maps to
    /// `p(image)`. Used to embed a field into a larger one.
    pub fn embed(&self, image_of_generator: &ExtElem) -> ExtElem {
        self.poly
            .coeffs()
            .iter()
            .rev()
            .fold(ExtElem::zero(), |acc, c| acc * image_of_generator.clone() + ExtElem::rational(c.clone()))
    }

    /// Matrix of multiplication by this element on the power basis of its
    /// field (columns are images of `1, t, …`). A rational is a 1×1 matrix.
    pub fn multiplication_matrix(&self) -> Vec<Vec<Rational>> {
        let Some(field) = &self.field else {
            return vec![vec![self.poly.coeff(0)]];
        };
        let k = field.degree();
        let mut cols = Vec::with_capacity(k);
        let mut cur = self.poly.clone();
        for _ in 0..k {
            cols.push(cur.clone());
            cur = (&cur * &Poly::x()).rem(&field.modulus).expect("nonzero modulus");
        }
        (0..k).map(|i| (0..k).map(|j| cols[j].coeff(i)).collect()).collect()
    }

    /// Characteristic polynomial of multiplication by this element, monic.
    pub fn char_poly(&self) -> Poly<Rational> {
        let c = linalg::charpoly(&self.multiplication_matrix());
        Poly::new(c.into_iter().rev().collect())
    }

    /// Norm to the rationals, `Res(m, x(t))` for the monic modulus `m`
    /// (the element itself when unbound).
    pub fn norm(&self) -> Rational {
        match &self.field {
            None => self.poly.coeff(0),
            Some(f) => resultant_univariate(&f.modulus, &self.poly).expect("resultant of rational polynomials"),
        }
    }

    /// Whether the element is integral at every prime above `p`, i.e. its
    /// characteristic polynomial has `p`-integral coefficients.
    pub fn is_p_integral(&self, p: u64) -> bool {
        self.char_poly().coeffs().iter().all(|c| valuation(c, p).is_none_or(|v| v >= 0))
    }

    fn join(a: &Option<Arc<ExtensionField>>, b: &Option<Arc<ExtensionField>>) -> Option<Arc<ExtensionField>> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert!(
                    Arc::ptr_eq(x, y) || x.modulus == y.modulus,
                    "arithmetic between elements of different extension fields"
                );
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    fn with(field: Option<Arc<ExtensionField>>, p: Poly<Rational>) -> Self {
        let poly = match &field {
            Some(f) if p.degree().unwrap_or(0) >= f.degree() => p.rem(&f.modulus).expect("nonzero modulus"),
            _ => p,
        };
        ExtElem { field, poly }
    }
}

impl PartialEq for ExtElem {
    fn eq(&self, o: &Self) -> bool {
        if let (Some(x), Some(y)) = (&self.field, &o.field) {
            if !(Arc::ptr_eq(x, y) || x.modulus == y.modulus) {
                return false;
            }
        }
        self.poly == o.poly
    }
}

impl Add for ExtElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::with(Self::join(&self.field, &o.field), &self.poly + &o.poly)
    }
}

impl Sub for ExtElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::with(Self::join(&self.field, &o.field), &self.poly - &o.poly)
    }
}

impl Mul for ExtElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::with(Self::join(&self.field, &o.field), &self.poly * &o.poly)
    }
}

impl Neg for ExtElem {
    type Output = Self;
    fn neg(self) -> Self {
        ExtElem { field: self.field, poly: -&self.poly }
    }
}

impl Zero for ExtElem {
    fn zero() -> Self {
        ExtElem { field: None, poly: Poly::zero() }
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl One for ExtElem {
    fn one() -> Self {
        ExtElem::rational(Rational::one())
    }
}

impl Scalar for ExtElem {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.field {
            None => Ok(ExtElem::rational(self.poly.coeff(0).recip())),
            Some(f) => Ok(ExtElem { field: Some(f.clone()), poly: self.poly.inv_mod(&f.modulus)? }),
        }
    }

    fn from_rational(q: &Rational) -> Result<Self> {
        Ok(ExtElem::rational(q.clone()))
    }

    fn from_i64(n: i64) -> Self {
        ExtElem::rational(Rational::from_integer(n.into()))
    }

    fn characteristic() -> u64 {
        0
    }

    fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.poly.coeff(0))
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{}", format_rational(&q));
        }
        let terms: Vec<String> = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_rational(c),
                1 => format!("{}*t", format_rational(c)),
                _ => format!("{}*t^{i}", format_rational(c)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Adjoin a root of a monic squarefree polynomial.
///
/// If `m` has a rational root, that root is returned as an unbound
/// (rational) element. Otherwise the result is the class of `t` in
/// `Q[t]/(m)`; the field's [`Irreducibility`] flag records whether `m`
/// was proved irreducible.
pub fn adjoin_root(m: &Poly<Rational>) -> Result<ExtElem> {
    let m = m.monic()?;
    if m.degree().unwrap_or(0) == 0 {
        return Err(Error::invalid("cannot adjoin a root of a constant"));
    }
    if !m.is_squarefree()? {
        return Err(Error::NotSquarefree);
    }
    if m.degree().is_some_and(|d| d <= MAX_FACTOR_DEGREE) {
        let fz = factor_rational(&m)?;
        if let Some((lin, _)) = fz.factors.iter().find(|(f, _)| f.degree() == Some(1)) {
            return Ok(ExtElem::rational(-lin.coeff(0) / lin.coeff(1)));
        }
    }
    Ok(ExtensionField::new(&m)?.generator())
}

/// Result of adjoining a root of a polynomial over an existing field,
/// flattened to a single modulus by a primitive element.
#[derive(Clone, Debug)]
pub struct Tower {
    /// Image of the old field's generator in the new field (`None` if the
    /// polynomial had rational coefficients).
    pub old_generator: Option<ExtElem>,
    /// A root of the adjoined polynomial in the new field.
    pub root: ExtElem,
}

impl Tower {
    /// Embed an element of the old field into the new one.
    pub fn embed(&self, x: &ExtElem) -> ExtElem {
        match (&self.old_generator, x.field()) {
            (Some(g), Some(_)) => x.embed(g),
            _ => x.clone(),
        }
    }
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Poly<Rational> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = Poly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &Poly::new(vec![-xs[i].clone(), Rational::one()])) + &Poly::constant(coef[i].clone());
    }
    p
}

/// Lowest-degree irreducible factor (degree ≤ [`MAX_FACTOR_DEGREE`]) or the
/// polynomial itself when it is too large to factor.
fn smallest_factor(m: &Poly<Rational>) -> Result<Poly<Rational>> {
    if m.degree().unwrap_or(0) > MAX_FACTOR_DEGREE {
        return Ok(m.clone());
    }
    let fz = factor_rational(m)?;
    fz.factors[0].0.monic()
}

/// Adjoin a root of `q` (coefficients in a common extension field, or
/// rational) and flatten to a single modulus.
///
/// The new field is generated by `θ = s + c·t` for the new root `s`, the old
/// generator `t` and a small integer `c` chosen so that `θ` is primitive;
/// its minimal polynomial is a factor of `Res_t(m(t), q(x − c·t, t))`.
pub fn adjoin_over(q: &Poly<ExtElem>) -> Result<Tower> {
    let q = q.monic()?;
    let e = q.degree().filter(|&e| e >= 1).ok_or_else(|| Error::invalid("cannot adjoin a root of a constant"))?;
    let base = q.coeffs().iter().find_map(|c| c.field().cloned());
    let Some(base) = base else {
        let qr = q.try_map(|c| c.to_rational().ok_or(Error::NotRational))?;
        let m = smallest_factor(&qr)?;
        let root =
            if m.degree() == Some(1) { ExtElem::rational(-m.coeff(0)) } else { ExtensionField::new(&m)?.generator() };
        return Ok(Tower { old_generator: None, root });
    };
    if e == 1 {
        return Ok(Tower { old_generator: Some(base.generator()), root: -q.coeff(0) });
    }
    let k = base.degree();
    let m = base.modulus().clone();
    let q_in_t: Vec<Poly<Rational>> = q.coeffs().iter().map(|c| c.poly().clone()).collect();
    for c in [1i64, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7] {
        let cq = Rational::from_integer(c.into());
        // M(x) = Res_t(m(t), Σᵢ qᵢ(t)(x − c t)ⁱ), by evaluation at k·e + 1 points.
        let xs: Vec<Rational> = (0..=(k * e) as i64).map(|j| Rational::from_integer(j.into())).collect();
        let ys = xs
            .iter()
            .map(|x| {
                let lin = Poly::new(vec![x.clone(), -cq.clone()]);
                let mut acc = Poly::zero();
                for qi in q_in_t.iter().rev() {
                    acc = &(&acc * &lin) + qi;
                }
                resultant_univariate(&m, &acc)
            })
            .collect::<Result<Vec<_>>>()?;
        let big_m = interpolate(&xs, &ys);
        if !big_m.is_squarefree()? {
            continue;
        }
        let mut modulus = smallest_factor(&big_m)?;
        loop {
            let field = ExtensionField::new(&modulus)?;
            let theta = field.generator();
            // gcd over the new field of m(T) and q(θ − cT, T).
            let m_t: Poly<ExtElem> = m.map(|a| ExtElem::rational(a.clone()));
            let lin = Poly::new(vec![theta.clone(), ExtElem::rational(-cq.clone())]);
            let mut q_t = Poly::zero();
            for qi in q_in_t.iter().rev() {
                q_t = &(&q_t * &lin) + &qi.map(|a| ExtElem::rational(a.clone()));
            }
            match Poly::gcd(&m_t, &q_t) {
                Ok(g) if g.degree() == Some(1) => {
                    let tau = -g.coeff(0);
                    let root = theta - ExtElem::rational(cq.clone()) * tau.clone();
                    return Ok(Tower { old_generator: Some(tau), root });
                }
                Ok(_) => break,
                Err(Error::NotInvertible { factor }) => {
                    let other = modulus.exact_div(&factor)?;
                    modulus = if factor.degree() <= other.degree() { factor } else { other };
                }
                Err(err) => return Err(err),
            }
        }
    }
    Err(Error::invalid("no primitive element found among small shifts"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpoly;
    use crate::scalar::rat;

    #[test]
    fn inversion_examples() {
        let f = ExtensionField::new(&qpoly(&[-5, 0, 1])).unwrap();
        let t = f.generator();
        assert_eq!(t.inv().unwrap(), t.clone() * ExtElem::rational(rat(1, 5)));
        assert_eq!(ExtElem::one().inv().unwrap(), ExtElem::one());
        let g = ExtensionField::new(&qpoly(&[-1, -1, 1])).unwrap();
        let s = g.generator();
        assert_eq!(s.inv().unwrap(), s - ExtElem::one());
    }

    #[test]
    fn zero_divisor_reports_factor() {
        let f = ExtensionField::new(&qpoly(&[-1, 0, 1])).unwrap();
        assert_eq!(f.irreducible(), Irreducibility::No);
        let x = f.generator() - ExtElem::one();
        assert!(matches!(x.inv(), Err(Error::NotInvertible { .. })));
    }

    #[test]
    fn adjoin_root_examples() {
        assert_eq!(adjoin_root(&qpoly(&[-3, 1])).unwrap(), ExtElem::rational(rat(3, 1)));
        let r = adjoin_root(&qpoly(&[-5, 0, 1])).unwrap();
        assert_eq!(r.clone() * r.clone(), ExtElem::from_i64(5));
        let c = adjoin_root(&qpoly(&[1, 1, -1, 1])).unwrap();
        assert_eq!(c.field().unwrap().irreducible(), Irreducibility::Yes);
        assert_eq!(c.field().unwrap().degree(), 3);
        assert_eq!(adjoin_root(&qpoly(&[0, 0, 1])), Err(Error::NotSquarefree));
    }

    #[test]
    fn norms() {
        let f = ExtensionField::new(&qpoly(&[-2, 0, 1])).unwrap();
        let x = f.generator() + ExtElem::one();
        // N(1 + √2) = 1 − 2 = −1
        assert_eq!(x.norm(), rat(-1, 1));
        assert_eq!(x.char_poly(), qpoly(&[-1, -2, 1]));
    }

    #[test]
    fn tower_splitting_field_of_cubic() {
        // x³ − 2: the splitting field has degree 6.
        let cubic = qpoly(&[-2, 0, 0, 1]);
        let r1 = adjoin_root(&cubic).unwrap();
        let k = r1.field().unwrap().clone();
        let lin = Poly::new(vec![-r1.clone(), ExtElem::one()]);
        let quad = cubic.map(|c| ExtElem::rational(c.clone())).exact_div(&lin).unwrap();
        let tower = adjoin_over(&quad).unwrap();
        let r1_big = tower.embed(&r1);
        let r2 = tower.root.clone();
        assert_eq!(r2.field().unwrap().degree(), 6);
        let cube = |x: &ExtElem| x.clone() * x.clone() * x.clone();
        assert_eq!(cube(&r1_big), ExtElem::from_i64(2));
        assert_eq!(cube(&r2), ExtElem::from_i64(2));
        assert_ne!(r1_big, r2);
        assert_eq!(k.degree(), 3);
    }

    #[test]
    fn tower_with_cyclic_cubic_stays_cubic() {
        // x³ − 3x + 1 has Galois group C₃: one root generates all.
        let cubic = qpoly(&[1, -3, 0, 1]);
        let r1 = adjoin_root(&cubic).unwrap();
        let lin = Poly::new(vec![-r1.clone(), ExtElem::one()]);
        let quad = cubic.map(|c| ExtElem::rational(c.clone())).exact_div(&lin).unwrap();
        let tower = adjoin_over(&quad).unwrap();
        assert_eq!(tower.root.field().unwrap().degree(), 3);
        let r2 = tower.root.clone();
        let val = cubic.map(|c| ExtElem::rational(c.clone())).eval(&r2);
        assert!(val.is_zero());
    }
}
