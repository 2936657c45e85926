//! Floating-point cross-check of exact multiplier spectra.
//!
//! The formal period-n points are found numerically as the complex roots of
//! the dehomogenized `Φₙ*` in a good chart (Aberth–Ehrlich iteration, then
//! Newton refinement on `φⁿ(z) − z`, which is better conditioned than the
//! expanded polynomial). Each multiplier is the chain-rule product
//! `Π φ′(φⁱ(z))` along the orbit, and the elementary symmetric functions
//! of the multipliers are compared with the exact per-point spectrum.

use num::ToPrimitive;
use num_complex::Complex64;

use ratmap_core::poly::Poly;
use ratmap_core::ratmap::RationalMap;
use ratmap_core::spectrum::{find_chart, sigma_spectrum_in_chart, Convention};
use ratmap_core::{Rational, Result};

/// Relative tolerance for the comparison.
pub const TOLERANCE: f64 = 1e-6;

/// Outcome of one comparison.
#[derive(Clone, Debug)]
pub struct FloatCheck {
    /// Worst `|numeric − exact| / scale` over `σ₁ … σ_ν`, where the scale
    /// is `max(|exact|, eₖ(|λ₁|, …, |λ_ν|))`: the size of the terms whose
    /// cancellation produces `σₖ`, which bounds the attainable accuracy.
    pub max_relative_error: f64,
    pub passed: bool,
    pub exact: Vec<Rational>,
    pub numeric: Vec<Complex64>,
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots of a polynomial (coefficients constant first, nonzero
/// leading coefficient) by Aberth–Ehrlich iteration.
pub fn complex_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let c: Vec<f64> = coeffs.iter().map(|a| a / lead).collect();
    // Fujiwara's bound on the root moduli.
    let radius = (1..=n)
        .map(|k| {
            let a = c[n - k].abs();
            if k == n {
                (a / 2.0).powf(1.0 / k as f64)
            } else {
                a.powf(1.0 / k as f64)
            }
        })
        .fold(0.0f64, f64::max)
        * 2.0;
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4)).collect();
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let (p, dp) = horner(&c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                moved = moved.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// A map `z ↦ A(z)/B(z)` evaluated in complex floating point.
struct FloatMap {
    a: Vec<f64>,
    b: Vec<f64>,
}

impl FloatMap {
    fn new(phi: &RationalMap<Rational>) -> Self {
        let conv = |p: &Poly<Rational>| p.coeffs().iter().map(to_f64).collect::<Vec<_>>();
        FloatMap { a: conv(&phi.a().dehomogenize()), b: conv(&phi.b().dehomogenize()) }
    }

    /// `(φ(z), φ′(z))`.
    fn eval(&self, z: Complex64) -> (Complex64, Complex64) {
        let (a, da) = horner(&self.a, z);
        let (b, db) = horner(&self.b, z);
        (a / b, (da * b - a * db) / (b * b))
    }

    /// `(φⁿ(z), (φⁿ)′(z))` by the chain rule.
    fn orbit(&self, z: Complex64, n: u32) -> (Complex64, Complex64) {
        let (mut w, mut lambda) = (z, Complex64::new(1.0, 0.0));
        for _ in 0..n {
            let (next, d) = self.eval(w);
            lambda *= d;
            w = next;
        }
        (w, lambda)
    }
}

/// Elementary symmetric functions `e₁ … e_ν` of complex numbers.
pub fn elementary_symmetric(xs: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(1.0, 0.0)];
    for &x in xs {
        e.push(Complex64::new(0.0, 0.0));
        for k in (1..e.len()).rev() {
            let prev = e[k - 1];
            e[k] += prev * x;
        }
    }
    e.remove(0);
    e
}

/// Compare the numerically computed per-point spectrum with the exact one.
pub fn float_oracle(phi: &RationalMap<Rational>, n: u32) -> Result<FloatCheck> {
    let chart = find_chart(phi, n)?;
    let exact = sigma_spectrum_in_chart(&chart, n, Convention::PerPoint)?.sigma;
    let fmap = FloatMap::new(&chart.map);
    let coeffs: Vec<f64> = chart.modulus.coeffs().iter().map(to_f64).collect();
    let mut multipliers = Vec::new();
    for mut z in complex_roots(&coeffs) {
        for _ in 0..8 {
            let (w, lambda) = fmap.orbit(z, n);
            let step = (w - z) / (lambda - 1.0);
            if !step.is_finite() || step.norm() <= 1e-16 * z.norm().max(1.0) {
                break;
            }
            let candidate = z - step;
            let (w2, _) = fmap.orbit(candidate, n);
            if (w2 - candidate).norm() >= (w - z).norm() {
                break;
            }
            z = candidate;
        }
        multipliers.push(fmap.orbit(z, n).1);
    }
    let numeric = elementary_symmetric(&multipliers);
    let abs: Vec<Complex64> = multipliers.iter().map(|l| Complex64::new(l.norm(), 0.0)).collect();
    let magnitude = elementary_symmetric(&abs);
    let mut worst = 0.0f64;
    for k in 0..exact.len() {
        let ex = to_f64(&exact[k]);
        let scale = ex.abs().max(magnitude[k].re);
        let err = (numeric[k] - ex).norm();
        let rel = if scale > 0.0 {
            err / scale
        } else if err == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        worst = worst.max(if rel.is_nan() { f64::INFINITY } else { rel });
    }
    Ok(FloatCheck { max_relative_error: worst, passed: worst <= TOLERANCE, exact, numeric })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_a_cubic() {
        // (z − 1)(z − 2)(z + 3) = z³ − 7z + 6.
        let mut r: Vec<f64> = complex_roots(&[6.0, -7.0, 0.0, 1.0]).iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        for (x, y) in r.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn z_squared_two_cycle() {
        let phi = RationalMap::<Rational>::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap();
        let check = float_oracle(&phi, 2).unwrap();
        assert!(check.passed, "{check:?}");
    }
}
