//! Periodic points, multiplier spectra and their relations.

use num::{BigInt, Zero};

use ratmap_core::dynatomic::{divisors, formal_per_form, nu, per_form};
use ratmap_core::milnor2::{
    eval_invariant_polynomial, fit_invariant_polynomial, has_integer_coefficients, monomial_count, sigma_pair,
};
use ratmap_core::random::Sampler;
use ratmap_core::ratmap::RationalMap;
use ratmap_core::scalar::rat;
use ratmap_core::spectrum::{find_chart, fixed_point_identity_check, sigma_spectrum, Convention};
use ratmap_core::{Error, Rational};

const NU_TABLE: [[u64; 8]; 7] = [
    [3, 2, 6, 12, 30, 54, 126, 240],
    [4, 6, 24, 72, 240, 696, 2184, 6480],
    [5, 12, 60, 240, 1020, 4020, 16380, 65280],
    [6, 20, 120, 600, 3120, 15480, 78120, 390000],
    [7, 30, 210, 1260, 7770, 46410, 279930, 1678320],
    [8, 42, 336, 2352, 16800, 117264, 823536, 5762400],
    [9, 56, 504, 4032, 32760, 261576, 2097144, 16773120],
];

#[test]
fn nu_table_and_divisor_sums() {
    for d in 2..=8u64 {
        for n in 1..=8u32 {
            assert_eq!(nu(d, n), BigInt::from(NU_TABLE[d as usize - 2][n as usize - 1]), "d={d} n={n}");
            let sum: BigInt = divisors(n).into_iter().map(|m| nu(d, m)).sum();
            assert_eq!(sum, BigInt::from(d).pow(n) + 1);
        }
    }
}

#[test]
fn dynatomic_forms_divide_and_have_the_right_degree() {
    for (d, max_n, count) in [(2usize, 4u32, 8u64), (3, 3, 4)] {
        for i in 0..count {
            let phi = Sampler::new(31, i).map(d);
            let phi1 = per_form(&phi, 1).unwrap().form;
            let mut product = None::<ratmap_core::poly::BinaryForm<Rational>>;
            for n in 1..=max_n {
                let full = per_form(&phi, n).unwrap();
                assert_eq!(full.form.degree(), d.pow(n) + 1);
                assert!(full.form.exact_div(&phi1).is_ok());
                let chart = find_chart(&phi, n).unwrap();
                assert_eq!(chart.modulus.degree(), Some(chart.star.expected_degree));
                if n == max_n {
                    // Πₘ|ₙ Φₘ* = Φₙ up to a scalar.
                    for m in divisors(n) {
                        let star = formal_per_form(&phi, m).unwrap().form;
                        product = Some(product.map_or(star.clone(), |p| p.mul(&star)));
                    }
                    assert_eq!(product.take().unwrap().normalized(), full.form.normalized());
                }
            }
        }
    }
}

#[test]
fn spectra_are_conjugation_invariant() {
    for i in 0..6 {
        let mut s = Sampler::new(32, i);
        let phi = s.map(2);
        let f = s.moebius(3);
        let psi = phi.conjugate(&f).unwrap();
        for n in 1..=3 {
            for c in Convention::ALL {
                assert_eq!(
                    sigma_spectrum(&phi, n, c).unwrap().sigma,
                    sigma_spectrum(&psi, n, c).unwrap().sigma,
                    "n={n} {c:?}"
                );
            }
        }
    }
}

#[test]
fn fixed_point_identity() {
    for d in 2..=5 {
        let mut checked = 0;
        for i in 0..12 {
            let phi = Sampler::new(33, i).map(d);
            match fixed_point_identity_check(&phi) {
                Ok(ok) => {
                    assert!(ok);
                    checked += 1;
                }
                Err(Error::DegenerateAtOne) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(checked > 6);
    }
}

#[test]
fn milnor_relations() {
    let mut constant = None;
    for i in 0..10 {
        let phi = Sampler::new(34, i).map(2);
        let (s1, s2) = sigma_pair(&phi).unwrap();
        let c2 = sigma_spectrum(&phi, 2, Convention::PerCycle).unwrap().sigma;
        assert_eq!(c2, vec![rat(2, 1) * &s1 + &s2]);
        let c3 = sigma_spectrum(&phi, 3, Convention::PerCycle).unwrap().sigma;
        let t = &s1 + &s2;
        let expect2 = &t * &t * (rat(2, 1) * &s1 + &s2) - &s1 * (&s1 + rat(2, 1) * &s2) + rat(12, 1) * &s1 + rat(28, 1);
        assert_eq!(c3[1], expect2);
        let c = &c3[0] - &s1 * (rat(2, 1) * &s1 + &s2) - rat(3, 1) * &s1;
        assert_eq!(*constant.get_or_insert(c.clone()), c);
    }
    // z² and the Chebyshev map z² − 2 pin the value.
    let z2 = RationalMap::<Rational>::from_i64s(&[1, 0, 0], &[0, 0, 1]).unwrap();
    let cheb = RationalMap::<Rational>::from_i64s(&[1, 0, -2], &[0, 0, 1]).unwrap();
    for phi in [z2, cheb] {
        let (s1, s2) = sigma_pair(&phi).unwrap();
        let c3 = sigma_spectrum(&phi, 3, Convention::PerCycle).unwrap().sigma;
        let c = &c3[0] - &s1 * (rat(2, 1) * &s1 + &s2) - rat(3, 1) * &s1;
        assert_eq!(Some(c), constant);
    }
    assert_eq!(constant, Some(rat(2, 1)));
}

#[test]
fn spectra_are_integer_polynomials_in_the_moduli() {
    // σ⁽²⁾ in the per-point convention: degree ≤ 4 in (σ₁, σ₂).
    let n = 2;
    let need = monomial_count(2 * n);
    let sample = |seed: u64, count: usize| -> Vec<(Rational, Rational, Vec<Rational>)> {
        (0..count as u64)
            .map(|i| {
                let phi = Sampler::new(seed, i).map(2);
                let (s1, s2) = sigma_pair(&phi).unwrap();
                (s1, s2, sigma_spectrum(&phi, n, Convention::PerPoint).unwrap().sigma)
            })
            .collect()
    };
    let train = sample(35, 3 * need);
    let fresh = sample(36, need);
    for k in 0..train[0].2.len() {
        let pts: Vec<_> = train.iter().map(|(a, b, s)| (a.clone(), b.clone(), s[k].clone())).collect();
        let poly = fit_invariant_polynomial(&pts, 2 * n).unwrap();
        assert!(has_integer_coefficients(&poly));
        for (a, b, s) in &fresh {
            assert_eq!(eval_invariant_polynomial(&poly, a, b), s[k]);
        }
        assert!(!poly.is_empty() || train.iter().all(|(_, _, s)| s[k].is_zero()));
    }
}
