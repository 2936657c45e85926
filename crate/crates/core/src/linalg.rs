//! Small exact linear algebra: determinants, characteristic polynomials and
//! consistent overdetermined solves.

#![allow(clippy::needless_range_loop)]
use num::{BigInt, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
///
/// Every intermediate entry is itself a minor of the input, so all divisions
/// are exact and no rational arithmetic is needed.
pub fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Determinant by Gaussian elimination over a field.
pub fn det_gauss<S: Scalar>(mut a: Vec<Vec<S>>) -> Result<S> {
    let n = a.len();
    let mut det = S::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(S::zero());
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det = det * pivot.clone();
        let inv = pivot.inv()?;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone() * inv.clone();
            for j in k..n {
                let v = a[i][j].clone() - factor.clone() * a[k][j].clone();
                a[i][j] = v;
            }
        }
    }
    Ok(det)
}

/// Characteristic polynomial of an integer matrix, `det(T·I − A)`, as
/// coefficients `c₀ = 1, c₁, …, c_n` of `T^n, T^{n−1}, …, 1`.
///
/// Faddeev–LeVerrier: `M₀ = 0`, `c₀ = 1`, `M_k = A·M_{k−1} + c_{k−1}·I`,
/// `c_k = −tr(A·M_k)/k`; over the integers each division by `k` is exact.
pub fn charpoly_integer(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut c = vec![BigInt::one()];
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{k−1}·I
        let mut mk = matmul(a, &m);
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c[k - 1];
        }
        let am = matmul(a, &mk);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let (q, r) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        c.push(q);
        m = mk;
    }
    c
}

fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i][k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Characteristic polynomial `det(T·I − A)` of a rational matrix, as
/// coefficients `c₀ = 1, …, c_n` (highest power first).
///
/// The matrix is scaled to an integer matrix `D·A`; the coefficients then
/// satisfy `c_k(A) = c_k(D·A) / D^k`.
pub fn charpoly(a: &[Vec<Rational>]) -> Vec<Rational> {
    let den = a.iter().flatten().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let int: Vec<Vec<BigInt>> =
        a.iter().map(|row| row.iter().map(|c| c.numer() * (&den / c.denom())).collect()).collect();
    let mut scale = BigInt::one();
    charpoly_integer(&int)
        .into_iter()
        .map(|c| {
            let v = Rational::new(c, scale.clone());
            scale *= &den;
            v
        })
        .collect()
}

/// Solve `A·x = b` exactly for a (possibly overdetermined) consistent system
/// with full column rank.
///
/// Errors with [`Error::SingularMatrix`] when the columns are dependent and
/// [`Error::InexactDivision`] when the system is inconsistent.
pub fn solve_overdetermined(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            return Err(Error::SingularMatrix);
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..=cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let v = &m[i][j] - &f * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::InexactDivision);
    }
    Ok((0..cols).map(|i| m[i][cols].clone()).collect())
}
