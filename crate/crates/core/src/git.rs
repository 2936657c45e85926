//! Stability of points of `P^{2d+1}` under conjugation, and the boundary of
//! the stable completion in degree 2.
//!
//! # The criterion without choosing coordinates
//!
//! A point `[F_a, F_b]` is unstable (resp. not stable) exactly when some
//! conjugate has `aᵢ = 0` for small `i` and `bᵢ = 0` for slightly larger
//! `i`. For the conjugate by `f` with `f([1:0]) = P` and `f([0:1]) = Q`,
//! the conjugated numerator is a multiple of `H_Q∘f` and the denominator a
//! multiple of `H_P∘f`, where `H_{[q₀:q₁]} = q₁F_a − q₀F_b`; vanishing of
//! the first `k` coefficients of a form composed with `f` means the form
//! vanishes to order `≥ k` at `f([1:0]) = P`. Writing the vanishing ranges
//! as thresholds on multiplicities:
//!
//! | test       | `mult_P(H_Q) ≥ θ_A` | `mult_P(H_P) ≥ θ_B` |
//! |------------|---------------------|---------------------|
//! | unstable   | `⌊(d+1)/2⌋`         | `⌊(d+3)/2⌋`         |
//! | not stable | `⌈(d−1)/2⌉`         | `⌈(d+1)/2⌉`         |
//!
//! for some `P ≠ Q` over the algebraic closure. For `d ≥ 2` both thresholds
//! are positive, and `H_P`, `H_Q` are independent combinations of `F_a`,
//! `F_b` when `P ≠ Q`; so `P` is a common root of `F_a` and `F_b`. The
//! candidates are therefore the roots of `gcd(F_a, F_b)`, one per
//! irreducible factor (multiplicities are Galois-invariant). For a fixed
//! `P` the condition on `Q` is linear: the first `θ_A` local coefficients
//! of `q₁F_a − q₀F_b` at `P` vanish. The solution space is all of `P¹`, a
//! single point, or empty; the single point must differ from `P`.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::milnor2::{rho_sigma_explicit, ModuliPoint};
use crate::poly::{BinaryForm, Poly};
use crate::ratmap::{MoebiusMatrix, ProjectivePoint, RationalMapPoint};
use crate::scalar::{adjoin_over, adjoin_root, rational_sqrt, ExtElem, Rational, Scalar};

/// Which of the two numerical tests to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strictness {
    /// Detects unstable points.
    UnstableTest,
    /// Detects points that are not stable (unstable or strictly semistable).
    NotStableTest,
}

impl Strictness {
    /// `(θ_A, θ_B)` for degree `d`.
    pub fn thresholds(self, d: usize) -> (usize, usize) {
        match self {
            Strictness::UnstableTest => (d.div_ceil(2), (d + 3) / 2),
            Strictness::NotStableTest => (d / 2, (d + 2) / 2),
        }
    }
}

/// Outcome of the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Stable,
    SemistableNotStable,
    Unstable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Stable => "stable",
            Verdict::SemistableNotStable => "semistable-not-stable",
            Verdict::Unstable => "unstable",
        }
    }
}

/// Points `P ≠ Q` certifying a failed test, with the attained
/// multiplicities `mult_P(H_Q)` and `mult_P(H_P)` (`d + 1` stands for a
/// form that vanishes identically). Coordinates may lie in the extension
/// `Q[t]/(modulus)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub strictness: Strictness,
    pub p: ProjectivePoint<ExtElem>,
    pub q: ProjectivePoint<ExtElem>,
    pub mult_h_q: usize,
    pub mult_h_p: usize,
    pub modulus: Option<Poly<Rational>>,
}

/// Verdict plus the witness of the strongest failed test.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityClass {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

/// Candidate points: one root of each irreducible factor of the gcd.
fn candidates(p: &RationalMapPoint<Rational>) -> Result<Vec<ProjectivePoint<ExtElem>>> {
    let g = BinaryForm::gcd(p.a(), p.b())?;
    if g.degree() == 0 {
        return Ok(Vec::new());
    }
    let (_, factors) = g.factor()?;
    factors
        .into_iter()
        .map(|(f, _)| {
            if f.y_power() > 0 {
                Ok(ProjectivePoint::infinity())
            } else {
                Ok(ProjectivePoint::finite(adjoin_root(&f.dehomogenize())?))
            }
        })
        .collect()
}

/// Coefficients of `F` in a local coordinate at `P` (length `d + 1`).
fn local_expansion(form: &BinaryForm<Rational>, at: &ProjectivePoint<ExtElem>) -> Vec<ExtElem> {
    let d = form.degree();
    let mut out: Vec<ExtElem> = match at.affine() {
        None => form.coeffs().iter().map(|c| ExtElem::rational(c.clone())).collect(),
        Some(c) => form.dehomogenize().map(|a| ExtElem::rational(a.clone())).taylor_shift(c).coeffs().to_vec(),
    };
    out.resize(d + 1, ExtElem::zero());
    out
}

/// Local coefficients of `H_Q = q₁F_a − q₀F_b`.
fn h_expansion(ea: &[ExtElem], eb: &[ExtElem], q: &ProjectivePoint<ExtElem>) -> Vec<ExtElem> {
    let (q0, q1) = q.coords();
    ea.iter().zip(eb).map(|(a, b)| q1.clone() * a.clone() - q0.clone() * b.clone()).collect()
}

fn order(coeffs: &[ExtElem]) -> usize {
    coeffs.iter().take_while(|c| c.is_zero()).count()
}

fn same_point(p: &ProjectivePoint<ExtElem>, q: &ProjectivePoint<ExtElem>) -> bool {
    let (p0, p1) = p.coords();
    let (q0, q1) = q.coords();
    (p0.clone() * q1.clone() - p1.clone() * q0.clone()).is_zero()
}

/// Search for a witness that the point fails the given test.
pub fn find_witness(p: &RationalMapPoint<Rational>, strictness: Strictness) -> Result<Option<Witness>> {
    let d = p.degree();
    if d < 2 {
        return Err(Error::invalid("stability is classified for degree at least 2"));
    }
    let (theta_a, theta_b) = strictness.thresholds(d);
    for cand in candidates(p)? {
        let ea = local_expansion(p.a(), &cand);
        let eb = local_expansion(p.b(), &cand);
        let h_p = h_expansion(&ea, &eb, &cand);
        if order(&h_p) < theta_b {
            continue;
        }
        // Rows [−eb_k, ea_k] for k < θ_A act on (q₀, q₁).
        let rows: Vec<(ExtElem, ExtElem)> = (0..theta_a).map(|k| (-eb[k].clone(), ea[k].clone())).collect();
        let q = match rows.iter().find(|(u, v)| !u.is_zero() || !v.is_zero()) {
            None => {
                if cand.is_infinity() {
                    ProjectivePoint::finite(ExtElem::zero())
                } else {
                    ProjectivePoint::infinity()
                }
            }
            Some((u, v)) => {
                let q = ProjectivePoint::new(v.clone(), -u.clone())?;
                let rank_one = rows.iter().all(|(s, t)| (u.clone() * t.clone() - v.clone() * s.clone()).is_zero());
                if !rank_one || same_point(&q, &cand) {
                    continue;
                }
                q
            }
        };
        let h_q = h_expansion(&ea, &eb, &q);
        let modulus = cand.coords().0.field().map(|f| f.modulus().clone());
        let mult = |h: &[ExtElem]| if h.iter().all(|c| c.is_zero()) { d + 1 } else { order(h) };
        return Ok(Some(Witness { strictness, mult_h_q: mult(&h_q), mult_h_p: mult(&h_p), p: cand, q, modulus }));
    }
    Ok(None)
}

/// Classify a point: unstable, strictly semistable or stable.
pub fn classify(p: &RationalMapPoint<Rational>) -> Result<StabilityClass> {
    if let Some(w) = find_witness(p, Strictness::UnstableTest)? {
        return Ok(StabilityClass { verdict: Verdict::Unstable, witness: Some(w) });
    }
    if let Some(w) = find_witness(p, Strictness::NotStableTest)? {
        return Ok(StabilityClass { verdict: Verdict::SemistableNotStable, witness: Some(w) });
    }
    Ok(StabilityClass { verdict: Verdict::Stable, witness: None })
}

/// `φ_{A,B} = [A·XY, XY + B·Y²]`, i.e. `z ↦ Az/(z + B)`.
pub fn phi_ab<S: Scalar>(a: &S, b: &S) -> Result<RationalMapPoint<S>> {
    RationalMapPoint::new(
        BinaryForm::new(vec![S::zero(), a.clone(), S::zero()]),
        BinaryForm::new(vec![S::zero(), S::one(), b.clone()]),
    )
}

/// A stable degenerate quadratic point brought to the shape `φ_{A,B}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryForm {
    pub a: ExtElem,
    pub b: ExtElem,
    /// The shear used in the last step.
    pub beta: ExtElem,
}

impl BoundaryForm {
    /// `[0 : AB : A² + B²]`, normalized. `A, B` are only defined up to a
    /// common factor, so the rational point is read off from the ratio
    /// `(A² + B²)/AB`.
    pub fn coordinate(&self) -> Result<ModuliPoint> {
        let ab = self.a.clone() * self.b.clone();
        let sq = self.a.clone() * self.a.clone() + self.b.clone() * self.b.clone();
        if ab.is_zero() {
            return ModuliPoint::projective(&Rational::zero(), &Rational::zero(), &Rational::one());
        }
        let ratio = sq.div(&ab)?.to_rational().ok_or(Error::NotRational)?;
        ModuliPoint::projective(&Rational::zero(), &Rational::one(), &ratio)
    }

    /// Coefficient field modulus, if `A, B` are irrational.
    pub fn modulus(&self) -> Option<Poly<Rational>> {
        [&self.a, &self.b, &self.beta].iter().find_map(|x| x.field().map(|f| f.modulus().clone()))
    }
}

/// Bring a stable point with vanishing resultant to the shape
/// `[A·XY, XY + B·Y²]`:
///
/// 1. conjugate a common root of `F_a, F_b` to `[1:0]`;
/// 2. check `b₁ ≠ 0` and scale to `b₁ = 1`;
/// 3. translate `z ↦ z + β` with `β² + (b₂ − a₁)β − a₂ = 0`, killing the
///    constant term of the numerator (a rational root when one exists);
/// 4. read off `A = a₁ − β`, `B = b₂ + β`.
///
/// The two roots `β` give `(A, B)` and `(B, A)`.
pub fn boundary_normal_form(p: &RationalMapPoint<Rational>) -> Result<BoundaryForm> {
    if p.degree() != 2 {
        return Err(Error::invalid("the boundary normal form is defined for degree 2"));
    }
    if !p.resultant()?.is_zero() {
        return Err(Error::NotDegenerate);
    }
    if classify(p)?.verdict != Verdict::Stable {
        return Err(Error::NotStable);
    }
    let root = candidates(p)?.into_iter().next().ok_or(Error::NotDegenerate)?;
    let lift =
        |f: &BinaryForm<Rational>| BinaryForm::new(f.coeffs().iter().map(|c| ExtElem::rational(c.clone())).collect());
    let point = RationalMapPoint::new(lift(p.a()), lift(p.b()))?;
    let point = match root.affine() {
        None => point,
        Some(c) if c.is_zero() => point.conjugate(&MoebiusMatrix::from_i64s(0, 1, 1, 0)?)?,
        Some(c) => point.conjugate(&MoebiusMatrix::new(c.clone(), ExtElem::zero(), ExtElem::one(), ExtElem::one())?)?,
    };
    let (a, b) = (point.a().coeffs(), point.b().coeffs());
    if !a[0].is_zero() || !b[0].is_zero() || b[1].is_zero() {
        return Err(Error::NotStable);
    }
    let (a1, a2, b2) = (a[1].div(&b[1])?, a[2].div(&b[1])?, b[2].div(&b[1])?);
    let beta = if a2.is_zero() {
        ExtElem::zero()
    } else if a1.clone() * b2.clone() == a2 {
        -b2.clone()
    } else {
        let lin = b2.clone() - a1.clone();
        let disc = lin.clone() * lin.clone() + ExtElem::from_i64(4) * a2.clone();
        let half = ExtElem::from_i64(2).inv()?;
        match disc.to_rational().and_then(|q| rational_sqrt(&q)) {
            Some(s) => (ExtElem::rational(s) - lin) * half,
            None => {
                let q = Poly::new(vec![-disc, ExtElem::zero(), ExtElem::one()]);
                let tower = adjoin_over(&q)?;
                (tower.root.clone() - tower.embed(&lin)) * half
            }
        }
    };
    let big_a = a1.clone() - beta.clone();
    let big_b = b2.clone() + beta.clone();
    if big_a.is_zero() && big_b.is_zero() {
        return Err(Error::NotStable);
    }
    Ok(BoundaryForm { a: big_a, b: big_b, beta })
}

/// `[ρ : ρσ₁ : ρσ₂]` of a quadratic point, normalized. On maps this is
/// `[1 : σ₁ : σ₂]`; on the boundary `[0 : AB : A² + B²]`. All three vanish
/// only on points that are not stable.
pub fn moduli_s_coordinate(p: &RationalMapPoint<Rational>) -> Result<ModuliPoint> {
    let (r, r1, r2) = rho_sigma_explicit(p)?;
    ModuliPoint::projective(&r, &r1, &r2)
}

/// The unordered pair `{[A:B], [B:A]}` of boundary parameters over
/// `[0 : u : v]`: `A/B` is a root of `t² − (v/u)t + 1` when `u ≠ 0`, and
/// one of `A, B` vanishes when `u = 0`.
pub fn boundary_inverse(u: &Rational, v: &Rational) -> Result<[ProjectivePoint<ExtElem>; 2]> {
    if u.is_zero() {
        if v.is_zero() {
            return Err(Error::AllZero);
        }
        return Ok([ProjectivePoint::infinity(), ProjectivePoint::finite(ExtElem::zero())]);
    }
    let poly = Poly::new(vec![Rational::one(), -(v / u), Rational::one()]);
    let t = if poly.is_squarefree()? {
        adjoin_root(&poly)?
    } else {
        // Double root t = v/(2u) = ±1.
        ExtElem::rational(v / (u * Rational::from_integer(2.into())))
    };
    let one = ExtElem::one();
    Ok([ProjectivePoint::new(t.clone(), one.clone())?, ProjectivePoint::new(one, t)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type P = RationalMapPoint<Rational>;

    #[test]
    fn thresholds() {
        assert_eq!(Strictness::UnstableTest.thresholds(2), (1, 2));
        assert_eq!(Strictness::NotStableTest.thresholds(2), (1, 2));
        assert_eq!(Strictness::UnstableTest.thresholds(3), (2, 3));
        assert_eq!(Strictness::NotStableTest.thresholds(3), (1, 2));
        assert_eq!(Strictness::UnstableTest.thresholds(4), (2, 3));
        assert_eq!(Strictness::NotStableTest.thresholds(4), (2, 3));
    }

    #[test]
    fn classify_examples() {
        let z2 = P::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap();
        assert_eq!(classify(&z2).unwrap().verdict, Verdict::Stable);
        let unstable = P::from_i64s(&[0, 0, 0], &[0, 1, 0]).unwrap();
        assert_eq!(classify(&unstable).unwrap().verdict, Verdict::Unstable);
        let semi = P::from_i64s(&[0, 1, 0, 0], &[0, 0, 0, 1]).unwrap();
        let c = classify(&semi).unwrap();
        assert_eq!(c.verdict, Verdict::SemistableNotStable);
        assert!(c.witness.unwrap().p.is_infinity());
        let ab = phi_ab(&rat(2, 1), &rat(3, 1)).unwrap();
        assert_eq!(classify(&ab).unwrap().verdict, Verdict::Stable);
    }

    #[test]
    fn boundary_examples() {
        let ab = phi_ab(&rat(2, 1), &rat(3, 1)).unwrap();
        let bf = boundary_normal_form(&ab).unwrap();
        assert_eq!((bf.a.clone(), bf.b.clone()), (ExtElem::from_i64(2), ExtElem::from_i64(3)));
        let p = P::from_i64s(&[0, 1, 1], &[0, 1, 0]).unwrap();
        let bf = boundary_normal_form(&p).unwrap();
        assert_eq!(bf.beta.clone() * bf.beta.clone(), bf.beta.clone() + ExtElem::one());
        let coord = bf.coordinate().unwrap();
        assert_eq!(coord.coordinates(), [rat(0, 1), rat(-1, 1), rat(3, 1)]);
        assert_eq!(moduli_s_coordinate(&p).unwrap(), coord);
        let prop = P::from_i64s(&[0, 5, 0], &[0, 2, 0]).unwrap();
        let bf = boundary_normal_form(&prop).unwrap();
        assert_eq!((bf.a, bf.b), (ExtElem::rational(rat(5, 2)), ExtElem::zero()));
        let z2 = P::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap();
        assert_eq!(boundary_normal_form(&z2).unwrap_err(), Error::NotDegenerate);
    }

    #[test]
    fn moduli_coordinates() {
        let z2 = P::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap();
        assert_eq!(moduli_s_coordinate(&z2).unwrap().coordinates(), [rat(1, 1), rat(2, 1), rat(0, 1)]);
        let one_zero = P::from_i64s(&[0, 1, 0], &[0, 1, 0]).unwrap();
        assert_eq!(moduli_s_coordinate(&one_zero).unwrap().coordinates(), [rat(0, 1), rat(0, 1), rat(1, 1)]);
        let unstable = P::from_i64s(&[0, 0, 0], &[0, 1, 0]).unwrap();
        assert_eq!(moduli_s_coordinate(&unstable), Err(Error::AllZero));
    }

    #[test]
    fn inverse_examples() {
        let [p, q] = boundary_inverse(&rat(1, 1), &rat(2, 1)).unwrap();
        assert_eq!(p.affine(), Some(&ExtElem::one()));
        assert_eq!(q.affine(), Some(&ExtElem::one()));
        let [p, q] = boundary_inverse(&rat(0, 1), &rat(1, 1)).unwrap();
        assert!(p.is_infinity() && q.affine().unwrap().is_zero());
        let [p, _] = boundary_inverse(&rat(1, 1), &rat(-3, 1)).unwrap();
        let t = p.affine().unwrap().clone();
        assert_eq!(t.clone() * t.clone() + ExtElem::from_i64(3) * t + ExtElem::one(), ExtElem::zero());
    }
}
