//! Periodic-point forms `Φₙ = Y·F_a⁽ⁿ⁾ − X·F_b⁽ⁿ⁾`, formal-period forms
//! `Φₙ* = Π_{m|n} Φ_m^{μ(n/m)}` and their degrees.

use num::{BigInt, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::BinaryForm;
use crate::ratmap::RationalMap;
use crate::scalar::Rational;

/// The Möbius function.
pub fn mobius(n: u32) -> i32 {
    assert!(n >= 1, "Möbius function is defined for n ≥ 1");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|m| n.is_multiple_of(*m)).collect()
}

/// `νₙ = Σ_{r|n} μ(n/r)(dʳ + 1)`: the number of points of formal period `n`
/// of a degree-`d` map, counted with multiplicity.
pub fn nu(d: u64, n: u32) -> BigInt {
    divisors(n)
        .into_iter()
        .map(|r| BigInt::from(mobius(n / r)) * (num::pow(BigInt::from(d), r as usize) + BigInt::one()))
        .fold(BigInt::zero(), |acc, x| acc + x)
}

fn nu_usize(d: usize, n: u32) -> usize {
    nu(d as u64, n).to_usize().expect("νₙ fits in usize at computable sizes")
}

/// A periodic-point form with its metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct DynatomicForm {
    /// The period `n`.
    pub n: u32,
    /// Whether this is the formal-period form `Φₙ*` (else `Φₙ`).
    pub star: bool,
    /// The form, normalized to primitive integer coefficients.
    pub form: BinaryForm<Rational>,
    /// `dⁿ + 1` for `Φₙ`, `νₙ` for `Φₙ*`.
    pub expected_degree: usize,
    /// Whether the form has no repeated factor. A non-squarefree `Φₙ*`
    /// (parabolic cycles) is kept with multiplicity, not reduced.
    pub squarefree: bool,
}

/// `Φ = Y·F_a − X·F_b` for a map's forms.
fn period_form(it: &RationalMap<Rational>) -> BinaryForm<Rational> {
    it.a().times_y().sub(&it.b().times_x())
}

fn finish(n: u32, star: bool, form: BinaryForm<Rational>, expected_degree: usize) -> Result<DynatomicForm> {
    let form = form.normalized();
    let squarefree = form.is_squarefree()?;
    Ok(DynatomicForm { n, star, form, expected_degree, squarefree })
}

/// `Φₙ` from the n-th iterate.
pub fn per_form_of_iterate(iterate: &RationalMap<Rational>, n: u32) -> Result<DynatomicForm> {
    let expected = iterate.degree() + 1;
    finish(n, false, period_form(iterate), expected)
}

/// `Φₙ(φ) = Y·F_a⁽ⁿ⁾ − X·F_b⁽ⁿ⁾`, of degree `dⁿ + 1`.
pub fn per_form(phi: &RationalMap<Rational>, n: u32) -> Result<DynatomicForm> {
    per_form_of_iterate(&phi.iterate(n)?, n)
}

/// `Φₙ*` from precomputed iterates `φ¹ … φᴺ` (`N ≥ n`).
///
/// Computed as an exact Möbius quotient: the product of the `Φ_m` with
/// `μ(n/m) = +1` divided by those with `μ(n/m) = −1`. An inexact division
/// signals a degenerate input.
pub fn formal_per_form_from_iterates(iterates: &[RationalMap<Rational>], n: u32) -> Result<DynatomicForm> {
    if n == 0 || iterates.len() < n as usize {
        return Err(Error::invalid("need the iterates φ¹ … φⁿ with n ≥ 1"));
    }
    let d = iterates[0].degree();
    let mut num: Option<BinaryForm<Rational>> = None;
    let mut dens = Vec::new();
    for m in divisors(n) {
        let phi_m = period_form(&iterates[m as usize - 1]);
        match mobius(n / m) {
            1 => num = Some(num.map_or(phi_m.clone(), |acc| acc.mul(&phi_m).normalized())),
            -1 => dens.push(phi_m),
            _ => {}
        }
    }
    let mut form = num.expect("μ(1) = 1 contributes Φₙ");
    for den in dens {
        form = form.exact_div(&den)?.normalized();
    }
    finish(n, true, form, nu_usize(d, n))
}

/// `Φₙ*(φ)`, of degree `νₙ`.
pub fn formal_per_form(phi: &RationalMap<Rational>, n: u32) -> Result<DynatomicForm> {
    formal_per_form_from_iterates(&phi.iterates(n), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BinaryForm;

    type M = RationalMap<Rational>;

    #[test]
    fn arithmetic_functions() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(7), -1);
        assert_eq!(nu(2, 2), BigInt::from(2));
        assert_eq!(nu(4, 4), BigInt::from(240));
        assert_eq!(nu(7, 5), BigInt::from(16800));
    }

    #[test]
    fn forms_of_squaring() {
        let phi = M::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap();
        assert_eq!(per_form(&phi, 1).unwrap().form, BinaryForm::from_i64s(&[0, 1, -1, 0]));
        assert_eq!(formal_per_form(&phi, 2).unwrap().form, BinaryForm::from_i64s(&[1, 1, 1]));
        let f3 = formal_per_form(&phi, 3).unwrap();
        assert_eq!(f3.form, BinaryForm::from_i64s(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(f3.expected_degree, 6);
        assert!(f3.squarefree);
        // z^d: Φₙ = XY(X^{dⁿ−1} − Y^{dⁿ−1})
        let cube = M::from_i64s(&[1, 0, 0, 0], &[0, 0, 0, 1]).unwrap();
        let p2 = per_form(&cube, 2).unwrap().form;
        let mut want = vec![0i64; 11];
        want[1] = 1;
        want[9] = -1;
        assert_eq!(p2, BinaryForm::from_i64s(&want));
    }

    #[test]
    fn chebyshev_minus_one() {
        let c = M::from_i64s(&[1, 0, -1], &[0, 0, 1]).unwrap();
        assert_eq!(per_form(&c, 1).unwrap().form, BinaryForm::from_i64s(&[0, 1, -1, -1]));
    }
}
