//! Polynomial arithmetic over small prime fields `F_ℓ`, used only by the
//! factorization routine. Polynomials are coefficient vectors (constant
//! first, no trailing zeros) of residues in `0..ℓ`.

use rand_chacha::rand_core::Rng;
use rand_chacha::ChaCha8Rng;

pub(super) type ModPoly = Vec<u64>;

fn mulmod(a: u64, b: u64, l: u64) -> u64 {
    ((a as u128 * b as u128) % l as u128) as u64
}

pub(super) fn inv_scalar(a: u64, l: u64) -> u64 {
    let (mut r0, mut r1) = (l as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "residue is not invertible");
    t0.rem_euclid(l as i128) as u64
}

pub(super) fn trim(mut p: ModPoly) -> ModPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn deg(p: &ModPoly) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(super) fn sub(a: &ModPoly, b: &ModPoly, l: u64) -> ModPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + l - y) % l
            })
            .collect(),
    )
}

pub(super) fn add(a: &ModPoly, b: &ModPoly, l: u64) -> ModPoly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % l).collect())
}

pub(super) fn mul(a: &ModPoly, b: &ModPoly, l: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, l)) % l;
        }
    }
    trim(out)
}

pub(super) fn scale(a: &ModPoly, c: u64, l: u64) -> ModPoly {
    trim(a.iter().map(|&x| mulmod(x, c, l)).collect())
}

pub(super) fn monic(a: &ModPoly, l: u64) -> ModPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv_scalar(lc, l), l),
    }
}

pub(super) fn divrem(a: &ModPoly, b: &ModPoly, l: u64) -> (ModPoly, ModPoly) {
    let db = deg(b).expect("division by zero polynomial");
    let inv = inv_scalar(*b.last().unwrap(), l);
    let mut r = a.clone();
    if a.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulmod(r[k + db], inv, l);
        q[k] = c;
        if c != 0 {
            for (j, &bc) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + l - mulmod(c, bc, l)) % l;
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(super) fn rem(a: &ModPoly, b: &ModPoly, l: u64) -> ModPoly {
    divrem(a, b, l).1
}

pub(super) fn gcd(a: &ModPoly, b: &ModPoly, l: u64) -> ModPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = rem(&x, &y, l);
        x = y;
        y = r;
    }
    monic(&x, l)
}

/// Returns `(s, t)` with `s·a + t·b = 1` for coprime `a, b`.
pub(super) fn bezout(a: &ModPoly, b: &ModPoly, l: u64) -> (ModPoly, ModPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, l);
        let s = sub(&s0, &mul(&q, &s1, l), l);
        let t = sub(&t0, &mul(&q, &t1, l), l);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    assert_eq!(r0.len(), 1, "factors are not coprime");
    let inv = inv_scalar(r0[0], l);
    (scale(&s0, inv, l), scale(&t0, inv, l))
}

pub(super) fn derivative(a: &ModPoly, l: u64) -> ModPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % l, l)).collect())
}

fn powmod(base: &ModPoly, mut e: u128, m: &ModPoly, l: u64) -> ModPoly {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, l);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, l), m, l);
        }
        e >>= 1;
        if e > 0 {
            b = rem(&mul(&b, &b, l), m, l);
        }
    }
    acc
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs of
/// (product of all irreducible factors of degree `i`, `i`).
fn distinct_degree(f: &ModPoly, l: u64) -> Vec<(ModPoly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut i = 0;
    while let Some(d) = deg(&rest) {
        if d == 0 {
            break;
        }
        i += 1;
        if 2 * i > d {
            out.push((rest.clone(), d));
            break;
        }
        h = powmod(&h, l as u128, &rest, l);
        let g = gcd(&rest, &sub(&h, &x, l), l);
        if deg(&g).unwrap_or(0) > 0 {
            rest = divrem(&rest, &g, l).0;
            h = rem(&h, &rest, l);
            out.push((g, i));
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting (odd `l`).
fn equal_degree(f: &ModPoly, d: usize, l: u64, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let n = deg(f).unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let e = ((l as u128).pow(d as u32) - 1) / 2;
    loop {
        let a = trim((0..n).map(|_| rng.next_u64() % l).collect());
        if deg(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = sub(&powmod(&a, e, f, l), &vec![1], l);
        let g = gcd(f, &b, l);
        let dg = deg(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let mut left = equal_degree(&g, d, l, rng);
            left.extend(equal_degree(&divrem(f, &g, l).0, d, l, rng));
            return left;
        }
    }
}

/// Whether `f` (monic) is squarefree modulo `l`.
pub(super) fn is_squarefree(f: &ModPoly, l: u64) -> bool {
    deg(&gcd(f, &derivative(f, l), l)) == Some(0)
}

/// Number of irreducible factors of a monic squarefree `f`.
pub(super) fn count_factors(f: &ModPoly, l: u64) -> usize {
    distinct_degree(f, l).iter().map(|(g, d)| deg(g).unwrap_or(0) / d).sum()
}

/// Complete factorization of a monic squarefree polynomial into monic
/// irreducibles.
pub(super) fn factor_squarefree(f: &ModPoly, l: u64, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, l) {
        out.extend(equal_degree(&g, d, l, rng));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;

    #[test]
    fn splits_into_irreducibles() {
        let l = 7;
        // (x − 1)(x − 2)(x² + 1) over F_7; x² + 1 is irreducible mod 7.
        let f = mul(&mul(&vec![6, 1], &vec![5, 1], l), &vec![1, 0, 1], l);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut fs = factor_squarefree(&f, l, &mut rng);
        fs.sort();
        assert_eq!(fs, vec![vec![1, 0, 1], vec![5, 1], vec![6, 1]]);
        assert_eq!(count_factors(&f, l), 3);
    }
}
