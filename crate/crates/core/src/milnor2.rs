//! Degree-2 moduli: the coordinates `(σ₁, σ₂)`, their inverse through
//! normal forms, and representatives with good reduction at a prime.
//!
//! Every quadratic map has three fixed-point multipliers `μ₁, μ₂, μ₃` with
//! `σ₃ = σ₁ − 2`, so they are the roots of the *multiplier cubic*
//! `T³ − σ₁T² + σ₂T − (σ₁ − 2)`. Conversely each pair `(s₁, s₂)` is realized
//! by a map, assembled from roots of that cubic.

use std::sync::Arc;

use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::solve_overdetermined;
use crate::poly::{factor_rational, BinaryForm, Poly};
use crate::ratmap::{RationalMap, RationalMapPoint};
use crate::scalar::{adjoin_over, adjoin_root, valuation, ExtElem, ExtensionField, Rational, Scalar};

/// Monomials `c · a₀^e₀ a₁^e₁ a₂^e₂ b₀^e₃ b₁^e₄ b₂^e₅`.
type Terms = &'static [(i64, [u32; 6])];

/// `ρ = Res(F_a, F_b)` for degree 2 (7 terms).
const RHO: Terms = &[
    (1, [0, 0, 2, 2, 0, 0]),
    (-1, [0, 1, 1, 1, 1, 0]),
    (1, [1, 0, 1, 0, 2, 0]),
    (1, [0, 2, 0, 1, 0, 1]),
    (-2, [1, 0, 1, 1, 0, 1]),
    (-1, [1, 1, 0, 0, 1, 1]),
    (1, [2, 0, 0, 0, 0, 2]),
];

/// `ρ·σ₁` (14 terms).
const RHO_SIGMA1: Terms = &[
    (1, [0, 3, 0, 1, 0, 0]),
    (-4, [1, 1, 1, 1, 0, 0]),
    (-6, [0, 0, 2, 2, 0, 0]),
    (-1, [1, 2, 0, 0, 1, 0]),
    (4, [2, 0, 1, 0, 1, 0]),
    (4, [0, 1, 1, 1, 1, 0]),
    (-2, [1, 0, 1, 0, 2, 0]),
    (1, [0, 0, 1, 0, 3, 0]),
    (-2, [0, 2, 0, 1, 0, 1]),
    (4, [1, 0, 1, 1, 0, 1]),
    (-4, [0, 0, 1, 1, 1, 1]),
    (-1, [0, 1, 0, 0, 2, 1]),
    (2, [2, 0, 0, 0, 0, 2]),
    (4, [0, 1, 0, 1, 0, 2]),
];

/// `ρ·σ₂` (19 terms).
const RHO_SIGMA2: Terms = &[
    (-1, [2, 2, 0, 0, 0, 0]),
    (4, [3, 0, 1, 0, 0, 0]),
    (-2, [0, 3, 0, 1, 0, 0]),
    (10, [1, 1, 1, 1, 0, 0]),
    (12, [0, 0, 2, 2, 0, 0]),
    (-4, [2, 0, 1, 0, 1, 0]),
    (-7, [0, 1, 1, 1, 1, 0]),
    (-1, [0, 2, 0, 0, 2, 0]),
    (5, [1, 0, 1, 0, 2, 0]),
    (-2, [0, 0, 1, 0, 3, 0]),
    (2, [2, 1, 0, 0, 0, 1]),
    (5, [0, 2, 0, 1, 0, 1]),
    (-4, [1, 0, 1, 1, 0, 1]),
    (-1, [1, 1, 0, 0, 1, 1]),
    (10, [0, 0, 1, 1, 1, 1]),
    (-4, [0, 1, 0, 1, 0, 2]),
    (2, [1, 0, 0, 0, 1, 2]),
    (-1, [0, 0, 0, 0, 2, 2]),
    (4, [0, 0, 0, 1, 0, 3]),
];

fn eval_terms<S: Scalar>(terms: Terms, x: &[S]) -> S {
    terms.iter().fold(S::zero(), |acc, (c, e)| {
        let mono = x.iter().zip(e).fold(S::from_i64(*c), |m, (v, &k)| m * v.pow(k));
        acc + mono
    })
}

/// `(ρ, ρσ₁, ρσ₂)` from the closed-form integer polynomials in the
/// coefficients of a degree-2 point (degenerate points allowed).
pub fn rho_sigma_explicit<S: Scalar>(p: &RationalMapPoint<S>) -> Result<(S, S, S)> {
    if p.degree() != 2 {
        return Err(Error::invalid("the closed forms apply to degree 2 only"));
    }
    let x = p.coefficients();
    Ok((eval_terms(RHO, &x), eval_terms(RHO_SIGMA1, &x), eval_terms(RHO_SIGMA2, &x)))
}

/// `(σ₁, σ₂) = (ρσ₁/ρ, ρσ₂/ρ)` of a quadratic map.
pub fn sigma_pair<S: Scalar>(phi: &RationalMap<S>) -> Result<(S, S)> {
    let (rho, r1, r2) = rho_sigma_explicit(phi.point())?;
    Ok((r1.div(&rho)?, r2.div(&rho)?))
}

/// `(σ₁, σ₂)` as rationals, for a map with possibly irrational coefficients
/// (the invariants of any representative are rational).
pub fn sigma_pair_rational<S: Scalar>(phi: &RationalMap<S>) -> Result<(Rational, Rational)> {
    let (s1, s2) = sigma_pair(phi)?;
    Ok((s1.to_rational().ok_or(Error::NotRational)?, s2.to_rational().ok_or(Error::NotRational)?))
}

/// A point of the degree-2 moduli space or of its completion `P²`.
#[derive(Clone, Debug, PartialEq)]
pub enum ModuliPoint {
    /// `(σ₁, σ₂)`, embedded as `[1 : σ₁ : σ₂]`.
    Affine { s1: Rational, s2: Rational },
    /// `[0 : x₁ : x₂]` on the boundary, as coprime integers whose last
    /// nonzero entry is positive.
    Boundary { x1: Rational, x2: Rational },
}

impl ModuliPoint {
    /// Normalize a projective triple.
    pub fn projective(x0: &Rational, x1: &Rational, x2: &Rational) -> Result<Self> {
        if !x0.is_zero() {
            return Ok(ModuliPoint::Affine { s1: x1 / x0, s2: x2 / x0 });
        }
        if x1.is_zero() && x2.is_zero() {
            return Err(Error::AllZero);
        }
        let den = x1.denom().lcm(x2.denom());
        let (n1, n2) = (x1.numer() * (&den / x1.denom()), x2.numer() * (&den / x2.denom()));
        let mut g = n1.gcd(&n2);
        let last = if n2.is_zero() { &n1 } else { &n2 };
        if last.is_negative() {
            g = -g;
        }
        Ok(ModuliPoint::Boundary { x1: Rational::from_integer(&n1 / &g), x2: Rational::from_integer(&n2 / &g) })
    }

    /// Homogeneous coordinates `[x₀ : x₁ : x₂]`.
    pub fn coordinates(&self) -> [Rational; 3] {
        match self {
            ModuliPoint::Affine { s1, s2 } => [Rational::one(), s1.clone(), s2.clone()],
            ModuliPoint::Boundary { x1, x2 } => [Rational::zero(), x1.clone(), x2.clone()],
        }
    }

    /// Whether the point lies on the boundary `x₀ = 0`.
    pub fn is_boundary(&self) -> bool {
        matches!(self, ModuliPoint::Boundary { .. })
    }
}

/// `(σ₁, σ₂)` of a rational quadratic map as a moduli point.
pub fn moduli_point(phi: &RationalMap<Rational>) -> Result<ModuliPoint> {
    let (s1, s2) = sigma_pair(phi)?;
    Ok(ModuliPoint::Affine { s1, s2 })
}

/// `T³ − s₁T² + s₂T − (s₁ − 2)`, constant term first.
pub fn multiplier_cubic(s1: &Rational, s2: &Rational) -> Poly<Rational> {
    let two = Rational::from_integer(2.into());
    Poly::new(vec![-(s1 - &two), s2.clone(), -s1.clone(), Rational::one()])
}

fn rational(q: Rational) -> ExtElem {
    ExtElem::rational(q)
}

fn map_from(a: [ExtElem; 3], b: [ExtElem; 3]) -> Result<RationalMap<ExtElem>> {
    RationalMap::from_forms(BinaryForm::new(a.to_vec()), BinaryForm::new(b.to_vec()))
}

/// `(z² + μ₁z)/(μ₂z + 1)`: fixed points `0, ∞` with multipliers `μ₁, μ₂`;
/// its resultant is `1 − μ₁μ₂`.
pub fn normal_form_pair(mu1: &ExtElem, mu2: &ExtElem) -> Result<RationalMap<ExtElem>> {
    map_from([ExtElem::one(), mu1.clone(), ExtElem::zero()], [ExtElem::zero(), mu2.clone(), ExtElem::one()])
}

/// `z + 1/z`, the unique class with all multipliers equal to 1.
pub fn z_plus_inverse() -> RationalMap<ExtElem> {
    RationalMap::from_i64s(&[1, 0, 1], &[0, 1, 0]).expect("z + 1/z is a morphism")
}

/// `(z² + βμz + 1)/(μz)`: a fixed point at infinity with multiplier `μ`,
/// where `β² = (1 − 2/μ)² − μ′μ″` for the other two multipliers.
fn scaled_inversion_form(mu: &ExtElem, beta: &ExtElem) -> Result<RationalMap<ExtElem>> {
    map_from(
        [ExtElem::one(), beta.clone() * mu.clone(), ExtElem::one()],
        [ExtElem::zero(), mu.clone(), ExtElem::zero()],
    )
}

/// `(z² + rz + r)/(μz)` with `r = (μ − 2)² − μσ₃` (that is `r = μ²β²` for the
/// β above): the same class as [`scaled_inversion_form`] after rescaling
/// `z`, but defined over `Q(μ)` without a square root.
fn cubic_field_form(mu: &ExtElem, sigma3: &Rational) -> Result<Option<RationalMap<ExtElem>>> {
    let two = ExtElem::from_i64(2);
    let r = (mu.clone() - two.clone()) * (mu.clone() - two) - mu.clone() * rational(sigma3.clone());
    if r.is_zero() {
        return Ok(None);
    }
    Ok(Some(map_from([ExtElem::one(), r.clone(), r], [ExtElem::zero(), mu.clone(), ExtElem::zero()])?))
}

/// The roots of the multiplier cubic grouped by irreducible factor:
/// rational roots (sorted, with multiplicity) and one representative root
/// of each nonlinear factor.
struct CubicRoots {
    rational: Vec<Rational>,
    irrational: Vec<ExtElem>,
}

fn cubic_roots(cubic: &Poly<Rational>) -> Result<CubicRoots> {
    let fz = factor_rational(cubic)?;
    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    for (f, e) in fz.factors {
        if f.degree() == Some(1) {
            let r = -f.coeff(0) / f.coeff(1);
            rational.extend(std::iter::repeat_n(r, e as usize));
        } else {
            irrational.push(adjoin_root(&f)?);
        }
    }
    rational.sort();
    Ok(CubicRoots { rational, irrational })
}

/// A map with moduli `(s₁, s₂)`.
///
/// * `(3, 3)` gives `z + 1/z`.
/// * If the multiplier cubic has a rational root, the result is
///   `(z² + μ₁z)/(μ₂z + 1)` with `μ₁` the smallest rational root admitting
///   a partner `μ₂` with `μ₁μ₂ ≠ 1` (rational partners first, ascending;
///   otherwise a root of the remaining quadratic factor, in a quadratic
///   field).
/// * If the cubic is irreducible the result is `(z² + rz + r)/(μz)` over the
///   cubic field `Q(μ)` (see [`cubic_field_form`]); the pair form would need
///   the degree-6 splitting field.
///
/// The output always satisfies `sigma_pair(result) = (s₁, s₂)`.
pub fn from_moduli(s1: &Rational, s2: &Rational) -> Result<RationalMap<ExtElem>> {
    let three = Rational::from_integer(3.into());
    if *s1 == three && *s2 == three {
        return Ok(z_plus_inverse());
    }
    let cubic = multiplier_cubic(s1, s2);
    let roots = cubic_roots(&cubic)?;
    let sigma3 = s1 - Rational::from_integer(2.into());
    if roots.rational.is_empty() {
        let mu = &roots.irrational[0];
        return match cubic_field_form(mu, &sigma3)? {
            Some(m) => Ok(m),
            None => scaled_inversion_form(mu, &ExtElem::zero()),
        };
    }
    for (i, mu1) in roots.rational.iter().enumerate() {
        if i > 0 && roots.rational[i - 1] == *mu1 {
            continue;
        }
        let mut partners: Vec<ExtElem> =
            roots.rational.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, r)| rational(r.clone())).collect();
        partners.extend(roots.irrational.iter().cloned());
        for mu2 in partners {
            if rational(mu1.clone()) * mu2.clone() != ExtElem::one() {
                return normal_form_pair(&rational(mu1.clone()), &mu2);
            }
        }
    }
    Err(Error::invalid("every pair of multipliers has product 1, but (s1, s2) ≠ (3, 3)"))
}

/// A representative with good reduction, together with how it was built.
#[derive(Clone, Debug)]
pub struct GoodReduction {
    pub map: RationalMap<ExtElem>,
    /// Which normal form produced it.
    pub form: &'static str,
    /// Norm of the resultant down to the rationals (a p-adic unit).
    pub resultant_norm: Rational,
}

/// The field generated by all coefficients of a map (`None` if rational).
pub fn coefficient_field(phi: &RationalMap<ExtElem>) -> Option<Arc<ExtensionField>> {
    phi.point().coefficients().iter().find_map(|c| c.field().cloned())
}

/// `p`-integral coefficients, a nonzero resultant whose norm is a `p`-adic
/// unit, and the requested moduli.
fn accept(
    phi: &RationalMap<ExtElem>,
    s: (&Rational, &Rational),
    p: u64,
    form: &'static str,
) -> Result<Option<GoodReduction>> {
    if !phi.point().coefficients().iter().all(|c| c.is_p_integral(p)) {
        return Ok(None);
    }
    let norm = phi.resultant().norm();
    if norm.is_zero() || valuation(&norm, p) != Some(0) {
        return Ok(None);
    }
    let (t1, t2) = sigma_pair_rational(phi)?;
    if (&t1, &t2) != s {
        return Ok(None);
    }
    Ok(Some(GoodReduction { map: phi.clone(), form, resultant_norm: norm }))
}

/// All three roots of the multiplier cubic inside one field (the splitting
/// field), in a fixed order.
fn split_roots(cubic: &Poly<Rational>, s1: &Rational) -> Result<[ExtElem; 3]> {
    let roots = cubic_roots(cubic)?;
    let s1e = rational(s1.clone());
    let mut all: Vec<ExtElem> = roots.rational.iter().cloned().map(rational).collect();
    match (all.len(), roots.irrational.first()) {
        (3, _) => {}
        (1, Some(s)) => {
            // The conjugate of s is the remaining root.
            let other = s1e - all[0].clone() - s.clone();
            all.push(s.clone());
            all.push(other);
        }
        (0, Some(mu)) => {
            let lin = Poly::new(vec![-mu.clone(), ExtElem::one()]);
            let quad = cubic.map(|c| rational(c.clone())).exact_div(&lin)?;
            let tower = adjoin_over(&quad)?;
            let m1 = tower.embed(mu);
            let m2 = tower.root.clone();
            let m3 = s1e - m1.clone() - m2.clone();
            all = vec![m1, m2, m3];
        }
        _ => return Err(Error::invalid("unexpected factorization of the multiplier cubic")),
    }
    Ok([all[0].clone(), all[1].clone(), all[2].clone()])
}

/// A representative of the class `(s₁, s₂)` whose coefficients are integral
/// at every prime above `p` and whose resultant is a unit there.
///
/// Candidates are tried in a fixed order and each is verified (integrality
/// via characteristic polynomials, unit resultant via its norm, moduli via
/// the closed forms); the first that passes is returned:
///
/// 1. `z + 1/z` when `(s₁, s₂) = (3, 3)`;
/// 2. `(z² + μᵢz)/(μⱼz + 1)` over the splitting field, every ordering;
/// 3. `(z² + βμz + 1)/(μz)` over `Q(μ, β)` for each multiplier `μ`;
/// 4. `(z² + rz + r)/(μz)` over `Q(μ)`;
/// 5. `(z² + μz)/(b₀z² + b₁z + 1)` over `Q(μ)` for small integers `b₁`: a
///    fixed point at 0 with multiplier `μ`, with `b₀` forced by the moduli.
///
/// A unit norm for the pair form only certifies `1 − μᵢμⱼ` is a unit at
/// *all* primes above `p` at once; when the roots reduce to 0 or 1 the
/// labelling varies from prime to prime and forms 4–5 cover those cases.
pub fn good_reduction_rep(s1: &Rational, s2: &Rational, p: u64) -> Result<GoodReduction> {
    if p < 3 || !(3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
        return Err(Error::invalid(format!("{p} is not an odd prime")));
    }
    for s in [s1, s2] {
        if valuation(s, p).is_some_and(|v| v < 0) {
            return Err(Error::BadValuation { p });
        }
    }
    let target = (s1, s2);
    let three = Rational::from_integer(3.into());
    if *s1 == three && *s2 == three {
        if let Some(g) = accept(&z_plus_inverse(), target, p, "z+1/z")? {
            return Ok(g);
        }
    }
    let cubic = multiplier_cubic(s1, s2);
    let sigma3 = s1 - Rational::from_integer(2.into());

    let mus = split_roots(&cubic, s1)?;
    for (i, j) in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)] {
        if mus[i].clone() * mus[j].clone() == ExtElem::one() {
            continue;
        }
        if let Some(g) = accept(&normal_form_pair(&mus[i], &mus[j])?, target, p, "pair")? {
            return Ok(g);
        }
    }

    // One representative root per irreducible factor suffices: the checks
    // are norms and characteristic polynomials, hence Galois-invariant.
    let roots = cubic_roots(&cubic)?;
    let mut reps: Vec<ExtElem> = roots.rational.iter().cloned().map(rational).collect();
    reps.dedup();
    reps.extend(roots.irrational);

    for mu in &reps {
        if mu.is_zero() {
            continue;
        }
        let two = ExtElem::from_i64(2);
        let one_minus = ExtElem::one() - two * mu.inv()?;
        let beta_sq = one_minus.clone() * one_minus - rational(sigma3.clone()) * mu.inv()?;
        let (mu_l, beta) = if beta_sq.is_zero() {
            (mu.clone(), ExtElem::zero())
        } else {
            let q = Poly::new(vec![-beta_sq, ExtElem::zero(), ExtElem::one()]);
            let tower = adjoin_over(&q)?;
            (tower.embed(mu), tower.root.clone())
        };
        if let Some(g) = accept(&scaled_inversion_form(&mu_l, &beta)?, target, p, "inversion")? {
            return Ok(g);
        }
    }
    for mu in &reps {
        if let Some(m) = cubic_field_form(mu, &sigma3)? {
            if let Some(g) = accept(&m, target, p, "cubic-field")? {
                return Ok(g);
            }
        }
    }
    for mu in &reps {
        // Other two roots: e₁ = s₁ − μ, e₂ = s₂ − μe₁.
        let e1 = rational(s1.clone()) - mu.clone();
        let e2 = rational(s2.clone()) - mu.clone() * e1.clone();
        let den = mu.clone() * mu.clone() - mu.clone() * rational(s1.clone()) - ExtElem::from_i64(2) * mu.clone()
            + ExtElem::from_i64(4);
        if den.is_zero() {
            continue;
        }
        for b1 in [0i64, 1, -1, 2, -2] {
            let b1 = ExtElem::from_i64(b1);
            let b0 = (b1.clone() * b1.clone() - e1.clone() * b1.clone() + e2.clone()).div(&den)?;
            let Ok(m) = map_from([ExtElem::one(), mu.clone(), ExtElem::zero()], [b0, b1, ExtElem::one()]) else {
                continue;
            };
            if let Some(g) = accept(&m, target, p, "fixed-point")? {
                return Ok(g);
            }
        }
    }
    Err(Error::invalid("no representative with good reduction among the normal forms"))
}

/// An integer polynomial in `(σ₁, σ₂)` of bounded total degree, as
/// `(exponent of σ₁, exponent of σ₂, coefficient)` triples.
pub type InvariantPolynomial = Vec<(u32, u32, Rational)>;

fn monomials(max_degree: u32) -> Vec<(u32, u32)> {
    (0..=max_degree).flat_map(|t| (0..=t).map(move |i| (i, t - i))).collect()
}

/// Evaluate an [`InvariantPolynomial`].
pub fn eval_invariant_polynomial(poly: &InvariantPolynomial, s1: &Rational, s2: &Rational) -> Rational {
    poly.iter().fold(Rational::zero(), |acc, (i, j, c)| acc + c * s1.pow(*i as i32) * s2.pow(*j as i32))
}

/// Find the polynomial of total degree ≤ `max_degree` through the samples
/// `(σ₁, σ₂, value)` by exact linear algebra. The samples must determine it
/// uniquely (full column rank) and be consistent; callers revalidate on
/// fresh samples.
pub fn fit_invariant_polynomial(
    samples: &[(Rational, Rational, Rational)],
    max_degree: u32,
) -> Result<InvariantPolynomial> {
    let monos = monomials(max_degree);
    let rows: Vec<Vec<Rational>> = samples
        .iter()
        .map(|(s1, s2, _)| monos.iter().map(|(i, j)| s1.pow(*i as i32) * s2.pow(*j as i32)).collect())
        .collect();
    let rhs: Vec<Rational> = samples.iter().map(|(_, _, v)| v.clone()).collect();
    let coeffs = solve_overdetermined(&rows, &rhs)?;
    Ok(monos.into_iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect())
}

/// Whether all coefficients of an invariant polynomial are integers.
pub fn has_integer_coefficients(poly: &InvariantPolynomial) -> bool {
    poly.iter().all(|(_, _, c)| c.is_integer())
}

/// Number of monomials of total degree ≤ `max_degree` in two variables.
pub fn monomial_count(max_degree: u32) -> usize {
    monomials(max_degree).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type M = RationalMap<Rational>;

    #[test]
    fn closed_form_examples() {
        let zpz = RationalMapPoint::<Rational>::from_i64s(&[1, 0, 1], &[0, 1, 0]).unwrap();
        assert_eq!(rho_sigma_explicit(&zpz).unwrap(), (rat(1, 1), rat(3, 1), rat(3, 1)));
        let p = RationalMapPoint::<Rational>::from_i64s(&[0, 1, 1], &[0, 1, 0]).unwrap();
        assert_eq!(rho_sigma_explicit(&p).unwrap(), (rat(0, 1), rat(1, 1), rat(-3, 1)));
        let (a, b) = (rat(2, 3), rat(-5, 1));
        let phi_ab = RationalMapPoint::new(
            BinaryForm::new(vec![rat(0, 1), a.clone(), rat(0, 1)]),
            BinaryForm::new(vec![rat(0, 1), rat(1, 1), b.clone()]),
        )
        .unwrap();
        let (r, r1, r2) = rho_sigma_explicit(&phi_ab).unwrap();
        // Normalization rescales the point; compare projectively.
        assert!(r.is_zero());
        assert_eq!(&r2 / &r1, (-(&a * &a) - &b * &b) / (-(&a * &b)));
    }

    #[test]
    fn sigma_pairs() {
        assert_eq!(sigma_pair(&M::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap()).unwrap(), (rat(2, 1), rat(0, 1)));
        assert_eq!(sigma_pair(&M::from_i64s(&[1, 0, 1], &[0, 1, 0]).unwrap()).unwrap(), (rat(3, 1), rat(3, 1)));
    }

    #[test]
    fn from_moduli_examples() {
        let m = from_moduli(&rat(3, 1), &rat(3, 1)).unwrap();
        assert_eq!(m, z_plus_inverse());
        let sq = from_moduli(&rat(2, 1), &rat(0, 1)).unwrap();
        assert_eq!(sq, RationalMap::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap());
        let c = from_moduli(&rat(1, 1), &rat(1, 1)).unwrap();
        assert_eq!(coefficient_field(&c).unwrap().degree(), 3);
        assert_eq!(sigma_pair_rational(&c).unwrap(), (rat(1, 1), rat(1, 1)));
    }

    #[test]
    fn good_reduction_examples() {
        let g = good_reduction_rep(&rat(2, 1), &rat(0, 1), 3).unwrap();
        assert_eq!(g.resultant_norm, rat(1, 1));
        let g = good_reduction_rep(&rat(3, 1), &rat(3, 1), 5).unwrap();
        assert_eq!(g.form, "z+1/z");
        assert_eq!(good_reduction_rep(&rat(1, 3), &rat(0, 1), 3).unwrap_err(), Error::BadValuation { p: 3 });
    }

    #[test]
    fn moduli_point_normalization() {
        let b = ModuliPoint::projective(&rat(0, 1), &rat(2, 1), &rat(-6, 1)).unwrap();
        assert_eq!(b.coordinates(), [rat(0, 1), rat(-1, 1), rat(3, 1)]);
        let a = ModuliPoint::projective(&rat(2, 1), &rat(4, 1), &rat(0, 1)).unwrap();
        assert_eq!(a, ModuliPoint::Affine { s1: rat(2, 1), s2: rat(0, 1) });
        assert_eq!(ModuliPoint::projective(&rat(0, 1), &rat(0, 1), &rat(0, 1)), Err(Error::AllZero));
    }
}
