//! Rational maps of `P¹` as pairs of binary forms, the conjugation action,
//! iteration, evaluation and multipliers.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::poly::{BinaryForm, Poly};
use crate::scalar::Scalar;

/// A point `[x:y]` of `P¹`, normalized to `[x:1]` or `[1:0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectivePoint<S> {
    x: S,
    y: S,
}

impl<S: Scalar> ProjectivePoint<S> {
    /// The point `[x:y]`; fails on `[0:0]`.
    pub fn new(x: S, y: S) -> Result<Self> {
        if y.is_zero() {
            if x.is_zero() {
                return Err(Error::ZeroPoint);
            }
            return Ok(Self::infinity());
        }
        Ok(ProjectivePoint { x: x.div(&y)?, y: S::one() })
    }

    /// The affine point `[c:1]`.
    pub fn finite(c: S) -> Self {
        ProjectivePoint { x: c, y: S::one() }
    }

    /// The point `[1:0]`.
    pub fn infinity() -> Self {
        ProjectivePoint { x: S::one(), y: S::zero() }
    }

    /// Whether this is `[1:0]`.
    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    /// Affine coordinate, `None` at infinity.
    pub fn affine(&self) -> Option<&S> {
        (!self.is_infinity()).then_some(&self.x)
    }

    /// Homogeneous coordinates `(x, y)`.
    pub fn coords(&self) -> (&S, &S) {
        (&self.x, &self.y)
    }
}

impl<S: Scalar> fmt::Display for ProjectivePoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.x, self.y)
    }
}

/// An invertible matrix `[[α, β], [γ, δ]]` acting on `P¹` by
/// `[X:Y] ↦ [αX + βY : γX + δY]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MoebiusMatrix<S> {
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
    pub delta: S,
}

impl<S: Scalar> MoebiusMatrix<S> {
    /// Build a matrix; fails with [`Error::SingularMatrix`] if `αδ − βγ = 0`.
    pub fn new(alpha: S, beta: S, gamma: S, delta: S) -> Result<Self> {
        let m = MoebiusMatrix { alpha, beta, gamma, delta };
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(m)
    }

    /// Matrix from small integers.
    pub fn from_i64s(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(S::from_i64(a), S::from_i64(b), S::from_i64(c), S::from_i64(d))
    }

    /// The identity.
    pub fn identity() -> Self {
        MoebiusMatrix { alpha: S::one(), beta: S::zero(), gamma: S::zero(), delta: S::one() }
    }

    /// `αδ − βγ`.
    pub fn det(&self) -> S {
        self.alpha.clone() * self.delta.clone() - self.beta.clone() * self.gamma.clone()
    }

    /// The adjugate, which represents the inverse transformation.
    pub fn inverse(&self) -> Self {
        MoebiusMatrix {
            alpha: self.delta.clone(),
            beta: -self.beta.clone(),
            gamma: -self.gamma.clone(),
            delta: self.alpha.clone(),
        }
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, o: &Self) -> Self {
        MoebiusMatrix {
            alpha: self.alpha.clone() * o.alpha.clone() + self.beta.clone() * o.gamma.clone(),
            beta: self.alpha.clone() * o.beta.clone() + self.beta.clone() * o.delta.clone(),
            gamma: self.gamma.clone() * o.alpha.clone() + self.delta.clone() * o.gamma.clone(),
            delta: self.gamma.clone() * o.beta.clone() + self.delta.clone() * o.delta.clone(),
        }
    }

    /// Image of a point.
    pub fn apply(&self, p: &ProjectivePoint<S>) -> Result<ProjectivePoint<S>> {
        let (x, y) = p.coords();
        ProjectivePoint::new(
            self.alpha.clone() * x.clone() + self.beta.clone() * y.clone(),
            self.gamma.clone() * x.clone() + self.delta.clone() * y.clone(),
        )
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [&S; 4] {
        [&self.alpha, &self.beta, &self.gamma, &self.delta]
    }
}

/// A point `[F_a, F_b]` of `P^{2d+1}`: two forms of a common degree, not
/// both zero, up to a common scalar. Degenerate points (common roots) are
/// allowed; see [`RationalMap`] for genuine morphisms.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMapPoint<S> {
    a: BinaryForm<S>,
    b: BinaryForm<S>,
}

impl<S: Scalar> RationalMapPoint<S> {
    /// Build and normalize; fails on mismatched degrees, degree 0 or the
    /// zero pair.
    pub fn new(a: BinaryForm<S>, b: BinaryForm<S>) -> Result<Self> {
        if a.degree() != b.degree() {
            return Err(Error::invalid("the two forms must have the same degree"));
        }
        if a.degree() == 0 {
            return Err(Error::invalid("degree must be at least 1"));
        }
        let d = a.degree();
        let mut v: Vec<S> = a.coeffs().iter().chain(b.coeffs()).cloned().collect();
        S::normalize_projective(&mut v)?;
        let b_coeffs = v.split_off(d + 1);
        Ok(RationalMapPoint { a: BinaryForm::new(v), b: BinaryForm::new(b_coeffs) })
    }

    /// Point from small integer coefficient lists `a₀…a_d`, `b₀…b_d`.
    pub fn from_i64s(a: &[i64], b: &[i64]) -> Result<Self> {
        Self::new(BinaryForm::from_i64s(a), BinaryForm::from_i64s(b))
    }

    /// Degree `d`.
    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    /// The numerator form `F_a`.
    pub fn a(&self) -> &BinaryForm<S> {
        &self.a
    }

    /// The denominator form `F_b`.
    pub fn b(&self) -> &BinaryForm<S> {
        &self.b
    }

    /// `Res(F_a, F_b)` of the normalized representative.
    pub fn resultant(&self) -> Result<S> {
        self.a.resultant(&self.b)
    }

    /// The conjugate `f⁻¹ ∘ φ ∘ f`:
    /// `[δ·F_a∘f − β·F_b∘f, −γ·F_a∘f + α·F_b∘f]`.
    pub fn conjugate(&self, f: &MoebiusMatrix<S>) -> Result<Self> {
        if f.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let (al, be, ga, de) = (&f.alpha, &f.beta, &f.gamma, &f.delta);
        let fa = self.a.substitute_linear(al, be, ga, de);
        let fb = self.b.substitute_linear(al, be, ga, de);
        Self::new(fa.scale(de).sub(&fb.scale(be)), fb.scale(al).sub(&fa.scale(ga)))
    }

    /// Coefficient vector `(a₀,…,a_d,b₀,…,b_d)`.
    pub fn coefficients(&self) -> Vec<S> {
        self.a.coeffs().iter().chain(self.b.coeffs()).cloned().collect()
    }
}

impl<S: Scalar> fmt::Display for RationalMapPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

/// A rational map of degree `d ≥ 1`: a [`RationalMapPoint`] whose forms have
/// no common root (nonzero resultant).
#[derive(Clone, Debug)]
pub struct RationalMap<S> {
    point: RationalMapPoint<S>,
    resultant: OnceLock<S>,
}

impl<S: Scalar> PartialEq for RationalMap<S> {
    fn eq(&self, o: &Self) -> bool {
        self.point == o.point
    }
}

impl<S: Scalar> RationalMap<S> {
    /// Promote a point; fails if the resultant vanishes.
    pub fn new(point: RationalMapPoint<S>) -> Result<Self> {
        let r = point.resultant()?;
        if r.is_zero() {
            return Err(Error::invalid("resultant vanishes: the forms share a root"));
        }
        Ok(RationalMap { point, resultant: OnceLock::from(r) })
    }

    /// Wrap a point known to be a morphism (conjugate or iterate of one);
    /// the resultant is computed lazily if ever requested.
    fn trusted(point: RationalMapPoint<S>) -> Self {
        RationalMap { point, resultant: OnceLock::new() }
    }

    /// Map from small integer coefficient lists.
    pub fn from_i64s(a: &[i64], b: &[i64]) -> Result<Self> {
        Self::new(RationalMapPoint::from_i64s(a, b)?)
    }

    /// Build from two forms.
    pub fn from_forms(a: BinaryForm<S>, b: BinaryForm<S>) -> Result<Self> {
        Self::new(RationalMapPoint::new(a, b)?)
    }

    /// The underlying point of `P^{2d+1}`.
    pub fn point(&self) -> &RationalMapPoint<S> {
        &self.point
    }

    /// Degree `d`.
    pub fn degree(&self) -> usize {
        self.point.degree()
    }

    /// Numerator form.
    pub fn a(&self) -> &BinaryForm<S> {
        self.point.a()
    }

    /// Denominator form.
    pub fn b(&self) -> &BinaryForm<S> {
        self.point.b()
    }

    /// `ρ = Res(F_a, F_b) ≠ 0` of the normalized representative.
    pub fn resultant(&self) -> S {
        self.resultant.get_or_init(|| self.point.resultant().expect("resultant of a morphism")).clone()
    }

    /// Conjugate by an invertible matrix.
    pub fn conjugate(&self, f: &MoebiusMatrix<S>) -> Result<Self> {
        Ok(Self::trusted(self.point.conjugate(f)?))
    }

    /// The composite `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let (ga, gb) = (inner.a(), inner.b());
        let a = self.a().compose_forms(ga, gb);
        let b = self.b().compose_forms(ga, gb);
        Self::trusted(RationalMapPoint::new(a, b).expect("composition of morphisms is a morphism"))
    }

    /// The iterates `φ¹, …, φⁿ` (each normalized to primitive form).
    pub fn iterates(&self, n: u32) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::with_capacity(n as usize);
        for k in 0..n {
            let next = if k == 0 { self.clone() } else { self.compose(&out[k as usize - 1]) };
            out.push(next);
        }
        out
    }

    /// The n-th iterate `φⁿ` (`n ≥ 1`), of degree `dⁿ`.
    pub fn iterate(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("iteration count must be at least 1"));
        }
        Ok(self.iterates(n).pop().expect("n ≥ 1"))
    }

    /// Image of a point.
    pub fn eval(&self, p: &ProjectivePoint<S>) -> Result<ProjectivePoint<S>> {
        let (x, y) = p.coords();
        ProjectivePoint::new(self.a().eval(x, y), self.b().eval(x, y))
    }

    /// Derivative of `φ` at `p` in the standard local coordinates: `z − p`
    /// at a finite point and `w = 1/z` at infinity, on both source and
    /// target.
    pub fn local_derivative(&self, p: &ProjectivePoint<S>) -> Result<S> {
        let image = self.eval(p)?;
        let (u, v, at) = match p.affine() {
            Some(c) => (self.a().dehomogenize(), self.b().dehomogenize(), c.clone()),
            None => (self.a().dehomogenize_at_infinity(), self.b().dehomogenize_at_infinity(), S::zero()),
        };
        let (num, den) = if image.is_infinity() { (v, u) } else { (u, v) };
        quotient_derivative(&num, &den, &at)
    }

    /// Multiplier of the n-cycle through `p`: `Π_{i<n} φ′(φⁱ(p))`.
    ///
    /// Fails with [`Error::NotPeriodic`] unless `φⁿ(p) = p`.
    pub fn multiplier_at(&self, p: &ProjectivePoint<S>, n: u32) -> Result<S> {
        if n == 0 {
            return Err(Error::invalid("period must be at least 1"));
        }
        let mut orbit = vec![p.clone()];
        for _ in 0..n {
            let next = self.eval(orbit.last().unwrap())?;
            orbit.push(next);
        }
        if orbit[n as usize] != *p {
            return Err(Error::NotPeriodic(n));
        }
        orbit[..n as usize].iter().try_fold(S::one(), |acc, q| Ok(acc * self.local_derivative(q)?))
    }
}

/// `(N/D)′(x) = (N′D − ND′)/D²` at `x`.
fn quotient_derivative<S: Scalar>(num: &Poly<S>, den: &Poly<S>, x: &S) -> Result<S> {
    let d = den.eval(x);
    let top = num.derivative().eval(x) * d.clone() - num.eval(x) * den.derivative().eval(x);
    top.div(&(d.clone() * d))
}

impl<S: Scalar> fmt::Display for RationalMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.point.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpoly;
    use crate::scalar::{adjoin_root, rat, ExtElem, Rational};

    type M = RationalMap<Rational>;

    fn square() -> M {
        M::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap()
    }

    #[test]
    fn conjugation_examples() {
        let phi = square();
        assert_eq!(phi.conjugate(&MoebiusMatrix::identity()).unwrap(), phi);
        assert_eq!(phi.conjugate(&MoebiusMatrix::from_i64s(3, 0, 0, 3).unwrap()).unwrap(), phi);
        let rot = MoebiusMatrix::from_i64s(0, -1, 1, 0).unwrap();
        assert_eq!(phi.conjugate(&rot).unwrap(), M::from_i64s(&[1, 0, 0], &[0, 0, -1]).unwrap());
    }

    #[test]
    fn iteration_examples() {
        let it = square().iterate(3).unwrap();
        assert_eq!(it.a().coeffs()[0], rat(1, 1));
        assert_eq!(it.degree(), 8);
        let c = M::from_i64s(&[1, 0, -1], &[0, 0, 1]).unwrap();
        assert_eq!(c.iterate(2).unwrap(), M::from_i64s(&[1, 0, -2, 0, 0], &[0, 0, 0, 0, 1]).unwrap());
    }

    #[test]
    fn multiplier_examples() {
        let phi = square();
        assert_eq!(phi.multiplier_at(&ProjectivePoint::finite(rat(1, 1)), 1).unwrap(), rat(2, 1));
        let zpz = M::from_i64s(&[1, 0, 1], &[0, 1, 0]).unwrap();
        assert_eq!(zpz.multiplier_at(&ProjectivePoint::infinity(), 1).unwrap(), rat(1, 1));
        assert_eq!(phi.multiplier_at(&ProjectivePoint::finite(rat(2, 1)), 1), Err(Error::NotPeriodic(1)));
        // Primitive cube root of unity: root of z² + z + 1.
        let omega = adjoin_root(&qpoly(&[1, 1, 1])).unwrap();
        let phi_ext = RationalMap::<ExtElem>::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap();
        assert_eq!(phi_ext.multiplier_at(&ProjectivePoint::finite(omega), 2).unwrap(), ExtElem::from_i64(4));
    }
}
