//! Factorization of univariate polynomials over the rationals.
//!
//! Strategy: squarefree decomposition (Yun), then for each squarefree part
//! the classical Zassenhaus method — factor modulo a small prime with
//! Cantor–Zassenhaus, Hensel-lift the factorization past a coefficient
//! bound, and recombine lifted factors by trial division over the integers.
//! Everything is exact; no floating point is involved.

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, ModPoly};
use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Largest degree accepted by [`factor_rational`].
pub const MAX_FACTOR_DEGREE: usize = 8;

/// `p = unit · Π fᵢ^{eᵢ}` with each `fᵢ` a primitive irreducible integer
/// polynomial with positive leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Poly<Rational>, u32)>,
}

/// Squarefree decomposition `p = c · Π gᵢ^i` (Yun's algorithm); returns the
/// nonconstant monic `gᵢ` with their multiplicities.
pub fn squarefree_decomposition(p: &Poly<Rational>) -> Result<Vec<(Poly<Rational>, u32)>> {
    let f = p.monic()?;
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let a0 = Poly::gcd(&f, &df)?;
    let mut b = f.exact_div(&a0)?;
    let c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = Poly::gcd(&b, &d)?;
        let b_next = b.exact_div(&a)?;
        let c_next = d.exact_div(&a)?;
        d = &c_next - &b_next.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        b = b_next;
        i += 1;
    }
    Ok(out)
}

/// Irreducible factorization over the rationals (degree ≤ [`MAX_FACTOR_DEGREE`]).
pub fn factor_rational(p: &Poly<Rational>) -> Result<Factorization> {
    let Some(n) = p.degree() else {
        return Err(Error::ZeroPoint);
    };
    if n > MAX_FACTOR_DEGREE {
        return Err(Error::FactorDegreeTooLarge { degree: n, max: MAX_FACTOR_DEGREE });
    }
    let mut factors = Vec::new();
    for (g, e) in squarefree_decomposition(p)? {
        let (_, prim) = g.primitive_integer();
        for h in factor_squarefree_integer(prim) {
            factors.push((Poly::from_integers(&h), e));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), format!("{:?}", a.0.coeffs())).cmp(&(b.0.degree(), format!("{:?}", b.0.coeffs())))
    });
    let mut prod = Poly::constant(Rational::one());
    for (f, e) in &factors {
        prod = &prod * &f.pow(*e);
    }
    let unit = p.lc() / prod.lc();
    Ok(Factorization { unit, factors })
}

fn primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn reduce(f: &[BigInt], l: u64) -> ModPoly {
    let lb = BigInt::from(l);
    modp::trim(f.iter().map(|c| c.mod_floor(&lb).to_u64().unwrap()).collect())
}

fn to_big(p: &ModPoly) -> Vec<BigInt> {
    p.iter().map(|&c| BigInt::from(c)).collect()
}

fn big_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn big_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn big_add_scaled(a: &[BigInt], b: &ModPoly, s: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n).map(|i| a.get(i).cloned().unwrap_or_default() + s * BigInt::from(b.get(i).copied().unwrap_or(0))).collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1) = (r1, r2);
        (t0, t1) = (t1, t2);
    }
    assert!(r0.is_one(), "leading coefficient not invertible modulo the prime power");
    t0.mod_floor(m)
}

/// Lift `f ≡ g·h (mod l)` (with `g` monic, `gcd(g,h) = 1`) to a
/// factorization modulo `l^k`.
fn hensel_pair(f: &[BigInt], g: &ModPoly, h: &ModPoly, l: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (s, t) = modp::bezout(g, h, l);
    let lb = BigInt::from(l);
    let (mut big_g, mut big_h) = (to_big(g), to_big(h));
    let mut lj = lb.clone();
    for _ in 1..k {
        let next = &lj * &lb;
        let prod = big_mul(&big_g, &big_h);
        let n = f.len().max(prod.len());
        let diff: Vec<BigInt> =
            (0..n).map(|i| f.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default()).collect();
        let e: Vec<BigInt> = big_mod(&diff, &next).into_iter().map(|c| c / &lj).collect();
        let e = reduce(&e, l);
        let te = modp::mul(&t, &e, l);
        let (q, a) = modp::divrem(&te, g, l);
        let b = modp::add(&modp::mul(&s, &e, l), &modp::mul(&q, h, l), l);
        big_g = big_mod(&big_add_scaled(&big_g, &a, &lj), &next);
        big_h = big_mod(&big_add_scaled(&big_h, &b, &lj), &next);
        lj = next;
    }
    (big_g, big_h)
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    let mut v: Vec<BigInt> = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn primitive(a: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if a.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    a.into_iter().map(|c| c / &g).collect()
}

/// Exact quotient over the integers, if `d | f`.
fn divides(f: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let q = Poly::from_integers(f).exact_div(&Poly::from_integers(d)).ok()?;
    q.is_integral().then(|| q.coeffs().iter().map(|c| c.numer().clone()).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // Advance the rightmost index that can still move.
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Factor a primitive squarefree integer polynomial of positive degree.
fn factor_squarefree_integer(f: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    let lc = f[n].clone();
    // Pick the prime (among a few admissible ones) giving the fewest
    // modular factors.
    let mut best: Option<(usize, u64)> = None;
    let mut tried = 0;
    for l in primes() {
        if (&lc % BigInt::from(l)).is_zero() {
            continue;
        }
        let fl = modp::monic(&reduce(&f, l), l);
        if !modp::is_squarefree(&fl, l) {
            continue;
        }
        let c = modp::count_factors(&fl, l);
        if best.is_none_or(|(bc, _)| c < bc) {
            best = Some((c, l));
        }
        tried += 1;
        if tried == 6 || c == 1 {
            break;
        }
    }
    let (count, l) = best.expect("some prime is admissible for a squarefree polynomial");
    if count == 1 {
        return vec![f];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let local = modp::factor_squarefree(&modp::monic(&reduce(&f, l), l), l, &mut rng);

    // Coefficient bound for lc·(monic factor): |lc| · 2ⁿ · ‖f‖₂.
    let norm2: BigInt = f.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = lc.abs() * (BigInt::one() << n) * norm2 * 2;
    let lb = BigInt::from(l);
    let mut k = 1u32;
    let mut modulus = lb.clone();
    while modulus <= bound {
        modulus *= &lb;
        k += 1;
    }

    // Multifactor lift by peeling one local factor at a time.
    let lc_mod_l = reduce(std::slice::from_ref(&lc), l).first().copied().unwrap_or(0);
    let mut lifted = Vec::new();
    let mut cur = big_mod(&f, &modulus);
    for i in 0..local.len() - 1 {
        let mut h = vec![lc_mod_l];
        for u in &local[i + 1..] {
            h = modp::mul(&h, u, l);
        }
        let (g, hh) = hensel_pair(&cur, &local[i], &h, l, k);
        lifted.push(g);
        cur = hh;
    }
    let inv_lc = mod_inverse(&lc, &modulus);
    lifted.push(big_mod(&cur.iter().map(|c| c * &inv_lc).collect::<Vec<_>>(), &modulus));

    // Recombination.
    let mut out = Vec::new();
    let mut rest = f;
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = None;
        for combo in combinations(remaining.len(), size) {
            let rlc = rest.last().unwrap().clone();
            let mut g = vec![rlc];
            for &i in &combo {
                g = big_mod(&big_mul(&g, &lifted[remaining[i]]), &modulus);
            }
            let cand = primitive(symmetric(&g, &modulus));
            if cand.len() < 2 {
                continue;
            }
            if let Some(q) = divides(&rest, &cand) {
                found = Some((combo, cand, q));
                break;
            }
        }
        match found {
            Some((combo, cand, q)) => {
                out.push(cand);
                rest = primitive(q);
                remaining = remaining.iter().enumerate().filter(|(i, _)| !combo.contains(i)).map(|(_, &r)| r).collect();
            }
            None => size += 1,
        }
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpoly;

    fn product(fz: &Factorization) -> Poly<Rational> {
        let mut p = Poly::constant(fz.unit.clone());
        for (f, e) in &fz.factors {
            p = &p * &f.pow(*e);
        }
        p
    }

    #[test]
    fn swinnerton_dyer_like_splitting() {
        // x⁴ + 1 is irreducible over Q but splits modulo every prime.
        let p = qpoly(&[1, 0, 0, 0, 1]);
        let fz = factor_rational(&p).unwrap();
        assert_eq!(fz.factors.len(), 1);
        assert_eq!(product(&fz), p);
    }

    #[test]
    fn mixed_factorization() {
        // 6·(x − 1)²·(2x + 3)·(x² + x + 1)·(x³ − 2)
        let p = &(&(&qpoly(&[-1, 1]).pow(2) * &qpoly(&[3, 2])) * &qpoly(&[1, 1, 1])) * &qpoly(&[-2, 0, 0, 1]);
        let p = p.scale(&Rational::from_integer(6.into()));
        let fz = factor_rational(&p).unwrap();
        assert_eq!(product(&fz), p);
        let degs: Vec<_> = fz.factors.iter().map(|(f, e)| (f.degree().unwrap(), *e)).collect();
        assert_eq!(degs, vec![(1, 2), (1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn big_coefficients() {
        // (x² − 1234567x + 7654321)(x² + 98765x − 1)
        let a = qpoly(&[7654321, -1234567, 1]);
        let b = qpoly(&[-1, 98765, 1]);
        let fz = factor_rational(&(&a * &b)).unwrap();
        assert_eq!(fz.factors.len(), 2);
    }

    #[test]
    fn degree_limit() {
        let p = qpoly(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert!(matches!(factor_rational(&p), Err(Error::FactorDegreeTooLarge { .. })));
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(2, 1), vec![vec![0], vec![1]]);
    }
}
