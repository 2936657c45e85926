//! Multiplier spectra `σᵢ⁽ⁿ⁾` as characteristic polynomials of operators on
//! the quotient algebra `Q[z]/(Φ̂ₙ*)`.
//!
//! In a chart where no formal-period-n point sits at infinity, the algebra
//! `Q[z]/(Φ̂ₙ*)` is the coordinate ring of the (scheme of) formal period-n
//! points. Multiplication by `w = (φⁿ)′` has the multipliers as eigenvalues,
//! so `det(T + M_w) = Σ σᵢ Tᵛ⁻ⁱ` packages their elementary symmetric
//! functions without ever locating a single periodic point.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::dynatomic::{formal_per_form_from_iterates, DynatomicForm};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::Poly;
use crate::ratmap::{MoebiusMatrix, RationalMap};
use crate::scalar::Rational;

/// How multipliers are packaged into a characteristic polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// One eigenvalue `(φⁿ)′(P)` per formal period-n point (each cycle's
    /// multiplier appears n times).
    PerPoint,
    /// One eigenvalue per cycle: the monic n-th root of the per-point
    /// polynomial.
    PerCycle,
    /// The pullback `h ↦ φ′·(h∘φ)` on the quotient algebra (`φ` itself, not
    /// its n-th iterate).
    Twisted,
}

impl Convention {
    /// Short name used on the command line and in JSON.
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::PerPoint => "point",
            Convention::PerCycle => "cycle",
            Convention::Twisted => "twisted",
        }
    }

    /// All conventions.
    pub const ALL: [Convention; 3] = [Convention::PerPoint, Convention::PerCycle, Convention::Twisted];
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "point" | "per-point" => Ok(Convention::PerPoint),
            "cycle" | "per-cycle" => Ok(Convention::PerCycle),
            "twisted" => Ok(Convention::Twisted),
            _ => Err(Error::invalid(format!("unknown convention {s:?} (expected point, cycle or twisted)"))),
        }
    }
}

/// The algebra `Q[z]/(g)` for a monic `g`, with elements stored reduced in
/// the power basis `1, z, …, z^{ν−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientAlgebra {
    modulus: Poly<Rational>,
}

impl QuotientAlgebra {
    /// The algebra of a monic modulus of positive degree.
    pub fn new(modulus: Poly<Rational>) -> Result<Self> {
        if modulus.degree().unwrap_or(0) == 0 || !modulus.lc().is_one() {
            return Err(Error::invalid("quotient modulus must be monic of positive degree"));
        }
        Ok(QuotientAlgebra { modulus })
    }

    /// The modulus `g`.
    pub fn modulus(&self) -> &Poly<Rational> {
        &self.modulus
    }

    /// Dimension `ν = deg g`.
    pub fn dimension(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// Reduce a polynomial modulo `g`.
    pub fn reduce(&self, p: &Poly<Rational>) -> Poly<Rational> {
        p.rem(&self.modulus).expect("monic modulus")
    }

    /// Product in the algebra.
    pub fn mul(&self, a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
        self.reduce(&(a * b))
    }

    /// Inverse in the algebra; [`Error::NotInvertible`] exposes a common
    /// factor with `g`.
    ///
    /// Solves `M_a·x = 1` by exact elimination on the multiplication matrix:
    /// rational Euclid's cofactors grow far faster than the entries of the
    /// eliminated matrix. A singular matrix falls back to Euclid to report
    /// the common factor.
    pub fn inv(&self, a: &Poly<Rational>) -> Result<Poly<Rational>> {
        let mut e0 = vec![Rational::zero(); self.dimension()];
        e0[0] = Rational::one();
        match linalg::solve_overdetermined(&self.multiplication_matrix(a), &e0) {
            Ok(x) => Ok(Poly::new(x)),
            Err(Error::SingularMatrix) => a.inv_mod(&self.modulus),
            Err(e) => Err(e),
        }
    }

    /// `h(u) mod g`.
    pub fn substitute(&self, h: &Poly<Rational>, u: &Poly<Rational>) -> Poly<Rational> {
        h.coeffs().iter().rev().fold(Poly::zero(), |acc, c| &self.mul(&acc, u) + &Poly::constant(c.clone()))
    }

    /// Matrix (in the power basis) of the linear map whose `j`-th column is
    /// `column(j)`.
    fn matrix(&self, column: impl Fn(usize) -> Poly<Rational>) -> Vec<Vec<Rational>> {
        let nu = self.dimension();
        let cols: Vec<Poly<Rational>> = (0..nu).map(column).collect();
        (0..nu).map(|i| (0..nu).map(|j| cols[j].coeff(i)).collect()).collect()
    }

    /// Matrix of multiplication by `w`.
    pub fn multiplication_matrix(&self, w: &Poly<Rational>) -> Vec<Vec<Rational>> {
        let mut powers = vec![self.reduce(w)];
        for j in 1..self.dimension() {
            let next = self.mul(&powers[j - 1], &Poly::x());
            powers.push(next);
        }
        self.matrix(|j| powers[j].clone())
    }
}

/// Elementary symmetric functions `σ₁ … σ_ν` of an operator's eigenvalues,
/// i.e. `det(T + M) = Σ σᵢ T^{ν−i}` with `σ₀ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierSpectrum {
    pub n: u32,
    pub convention: Convention,
    pub sigma: Vec<Rational>,
    /// Squarefreeness of the underlying `Φₙ*`; a non-squarefree form means
    /// the operator acts on a non-reduced algebra.
    pub squarefree: bool,
}

impl MultiplierSpectrum {
    /// Number of eigenvalues.
    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    /// Whether the spectrum is empty.
    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    /// The monic polynomial `det(T + M)` (coefficients constant first).
    pub fn polynomial(&self) -> Poly<Rational> {
        let mut v: Vec<Rational> = self.sigma.iter().rev().cloned().collect();
        v.push(Rational::one());
        Poly::new(v)
    }
}

/// Everything computed while fixing a chart: the conjugated map, its
/// iterates, and its formal-period form.
#[derive(Clone, Debug)]
pub struct Chart {
    /// The conjugated map `φ^f`.
    pub map: RationalMap<Rational>,
    /// The conjugating matrix `f`.
    pub matrix: MoebiusMatrix<Rational>,
    /// `φ^f, (φ^f)², …, (φ^f)ⁿ`.
    pub iterates: Vec<RationalMap<Rational>>,
    /// `Φₙ*(φ^f)`.
    pub star: DynatomicForm,
    /// The monic dehomogenization of `Φₙ*(φ^f)`.
    pub modulus: Poly<Rational>,
}

/// Retry budget for the chart search.
pub const CHART_BUDGET: usize = 256;

/// Candidate charts: the identity, then the shears `z ↦ z/(cz + 1)` for
/// `c = 1, −1, 2, −2, …`, which move infinity to the distinct points
/// `[1:c]`. At most `νₙ` of them can fail, so the search is deterministic
/// and terminates well inside the budget.
fn candidate(k: usize) -> MoebiusMatrix<Rational> {
    if k == 0 {
        return MoebiusMatrix::identity();
    }
    let c = k.div_ceil(2) as i64 * if k % 2 == 1 { 1 } else { -1 };
    MoebiusMatrix::from_i64s(1, 0, c, 1).expect("shears are invertible")
}

/// Find a chart for period `n`: `deg Φ̂ₙ* = νₙ` (no formal period-n point
/// at infinity) and the denominator of `(φⁿ)′` is coprime to `Φ̂ₙ*` (no
/// cycle through a pole).
pub fn find_chart(phi: &RationalMap<Rational>, n: u32) -> Result<Chart> {
    if n == 0 {
        return Err(Error::invalid("period must be at least 1"));
    }
    for k in 0..CHART_BUDGET {
        let f = candidate(k);
        let map = phi.conjugate(&f)?;
        let iterates = map.iterates(n);
        let star = formal_per_form_from_iterates(&iterates, n)?;
        if star.form.degree() != star.expected_degree || star.form.coeff(0).is_zero() {
            continue;
        }
        let modulus = star.form.dehomogenize().monic()?;
        let den = iterates[n as usize - 1].b().dehomogenize();
        if Poly::gcd(&den, &modulus)?.degree() != Some(0) {
            continue;
        }
        return Ok(Chart { map, matrix: f, iterates, star, modulus });
    }
    Err(Error::ChartSearchExhausted(CHART_BUDGET))
}

/// The conjugated map `φ^f` and the matrix `f` of a good chart.
pub fn good_chart(phi: &RationalMap<Rational>, n: u32) -> Result<(RationalMap<Rational>, MoebiusMatrix<Rational>)> {
    let chart = find_chart(phi, n)?;
    Ok((chart.map, chart.matrix))
}

/// `(N/D)′ = (N′D − ND′)/D²` as an element of the algebra.
fn derivative_element(alg: &QuotientAlgebra, num: &Poly<Rational>, den: &Poly<Rational>) -> Result<Poly<Rational>> {
    let top = &(&num.derivative() * den) - &(num * &den.derivative());
    let inv = alg.inv(&alg.reduce(&(den * den)))?;
    Ok(alg.mul(&top, &inv))
}

/// `σ` from the characteristic polynomial `det(T − M)`: `σ_k = (−1)^k c_k`.
fn sigma_of(matrix: &[Vec<Rational>]) -> Vec<Rational> {
    linalg::charpoly(matrix).into_iter().enumerate().skip(1).map(|(k, c)| if k % 2 == 0 { c } else { -c }).collect()
}

/// The monic n-th root of a monic polynomial given by its coefficients
/// below the leading 1, highest first (`[σ₁, …, σ_ν]`).
///
/// Runs the power-series recursion for `f^{1/n}` in `1/T` and then checks
/// `gⁿ = f` exactly.
pub fn nth_root(sigma: &[Rational], n: u32) -> Result<Vec<Rational>> {
    let nu = sigma.len();
    if n == 0 || !nu.is_multiple_of(n as usize) {
        return Err(Error::NotAnNthPower(n));
    }
    let m = nu / n as usize;
    let alpha = Rational::new(1.into(), n.into());
    let f: Vec<Rational> = std::iter::once(Rational::one()).chain(sigma.iter().cloned()).collect();
    let mut h = vec![Rational::one()];
    for k in 1..=m {
        let mut acc = Rational::zero();
        for j in 1..=k {
            let coef =
                &alpha * Rational::from_integer((j as i64).into()) - Rational::from_integer(((k - j) as i64).into());
            acc += coef * &f[j] * &h[k - j];
        }
        h.push(acc / Rational::from_integer((k as i64).into()));
    }
    // Exact check gⁿ = f, with g = Σ h_k T^{m−k}.
    let g = Poly::new(h.iter().rev().cloned().collect());
    let fpoly = Poly::new(f.iter().rev().cloned().collect());
    if g.pow(n) != fpoly {
        return Err(Error::NotAnNthPower(n));
    }
    Ok(h[1..].to_vec())
}

/// Spectrum with an already fixed chart.
pub fn sigma_spectrum_in_chart(chart: &Chart, n: u32, convention: Convention) -> Result<MultiplierSpectrum> {
    let alg = QuotientAlgebra::new(chart.modulus.clone())?;
    let it = &chart.iterates[n as usize - 1];
    let sigma = match convention {
        Convention::PerPoint | Convention::PerCycle => {
            let w = derivative_element(&alg, &it.a().dehomogenize(), &it.b().dehomogenize())?;
            let per_point = sigma_of(&alg.multiplication_matrix(&w));
            if convention == Convention::PerPoint {
                per_point
            } else {
                nth_root(&per_point, n)?
            }
        }
        Convention::Twisted => {
            let (a1, b1) = (chart.map.a().dehomogenize(), chart.map.b().dehomogenize());
            let image = alg.mul(&a1, &alg.inv(&alg.reduce(&b1))?);
            let dphi = derivative_element(&alg, &a1, &b1)?;
            let mut cols = vec![alg.reduce(&dphi)];
            for j in 1..alg.dimension() {
                let next = alg.mul(&cols[j - 1], &image);
                cols.push(next);
            }
            // Column j is φ′·φʲ: the operator h ↦ φ′·(h∘φ) on the basis zʲ.
            sigma_of(&alg.matrix(|j| cols[j].clone()))
        }
    };
    Ok(MultiplierSpectrum { n, convention, sigma, squarefree: chart.star.squarefree })
}

/// The multiplier spectrum `σ⁽ⁿ⁾(φ)` in the given convention.
pub fn sigma_spectrum(phi: &RationalMap<Rational>, n: u32, convention: Convention) -> Result<MultiplierSpectrum> {
    let chart = find_chart(phi, n)?;
    sigma_spectrum_in_chart(&chart, n, convention)
}

/// The fixed-point identity `Σ 1/(1 − λ) = 1`, restated as `p′(1) = p(1)` for
/// `p(T) = Π (T − λ)` over the fixed-point multipliers.
///
/// Fails with [`Error::DegenerateAtOne`] when `p(1) = 0`.
pub fn fixed_point_identity_check(phi: &RationalMap<Rational>) -> Result<bool> {
    let spectrum = sigma_spectrum(phi, 1, Convention::PerPoint)?;
    let deg = spectrum.len() as i64;
    let (mut p1, mut dp1) = (Rational::one(), Rational::from_integer(deg.into()));
    for (i, s) in spectrum.sigma.iter().enumerate() {
        let i = i as i64 + 1;
        let term = if i % 2 == 0 { s.clone() } else { -s.clone() };
        p1 += &term;
        dp1 += term * Rational::from_integer((deg - i).into());
    }
    if p1.is_zero() {
        return Err(Error::DegenerateAtOne);
    }
    Ok(dp1 == p1)
}

/// Convenience: the n = 1 per-point spectrum as `(σ₁, …, σ_{d+1})`.
pub fn fixed_point_sigma(phi: &RationalMap<Rational>) -> Result<Vec<Rational>> {
    Ok(sigma_spectrum(phi, 1, Convention::PerPoint)?.sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type M = RationalMap<Rational>;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn squaring_spectra() {
        let phi = M::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap();
        assert_eq!(sigma_spectrum(&phi, 1, Convention::PerPoint).unwrap().sigma, ints(&[2, 0, 0]));
        assert_eq!(sigma_spectrum(&phi, 2, Convention::PerPoint).unwrap().sigma, ints(&[8, 16]));
        assert_eq!(sigma_spectrum(&phi, 2, Convention::PerCycle).unwrap().sigma, ints(&[4]));
        assert_eq!(sigma_spectrum(&phi, 2, Convention::Twisted).unwrap().sigma, ints(&[0, -4]));
        assert_eq!(sigma_spectrum(&phi, 3, Convention::PerCycle).unwrap().sigma, ints(&[16, 64]));
        let (_, f) = good_chart(&phi, 2).unwrap();
        assert_eq!(f, MoebiusMatrix::identity());
        assert!(fixed_point_identity_check(&phi).unwrap());
    }

    #[test]
    fn parabolic_map() {
        let phi = M::from_i64s(&[1, 0, 1], &[0, 1, 0]).unwrap();
        let (_, f) = good_chart(&phi, 1).unwrap();
        assert_ne!(f, MoebiusMatrix::identity());
        assert_eq!(sigma_spectrum(&phi, 1, Convention::PerPoint).unwrap().sigma, ints(&[3, 3, 1]));
        assert_eq!(fixed_point_identity_check(&phi), Err(Error::DegenerateAtOne));
    }

    #[test]
    fn nth_roots() {
        // (T + 4)² = T² + 8T + 16
        assert_eq!(nth_root(&ints(&[8, 16]), 2).unwrap(), ints(&[4]));
        assert_eq!(nth_root(&ints(&[8, 15]), 2), Err(Error::NotAnNthPower(2)));
        assert_eq!(nth_root(&ints(&[1, 2, 3]), 2), Err(Error::NotAnNthPower(2)));
    }
}
