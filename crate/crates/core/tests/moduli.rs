//! Degree-2 moduli: closed forms, inverse map and good reduction on random
//! samples.

use ratmap_core::milnor2::{
    coefficient_field, from_moduli, good_reduction_rep, normal_form_pair, rho_sigma_explicit, sigma_pair,
    sigma_pair_rational,
};
use ratmap_core::random::Sampler;
use ratmap_core::scalar::{rat, valuation};
use ratmap_core::spectrum::{sigma_spectrum, Convention};
use ratmap_core::{ExtElem, Rational, Scalar};

#[test]
fn closed_forms_match_the_fixed_point_spectrum() {
    for i in 0..60 {
        let phi = Sampler::new(11, i).map(2);
        let (s1, s2) = sigma_pair(&phi).unwrap();
        let spectrum = sigma_spectrum(&phi, 1, Convention::PerPoint).unwrap();
        assert_eq!(spectrum.sigma[..2], [s1.clone(), s2]);
        // σ₃ = σ₁ − 2.
        assert_eq!(spectrum.sigma[2], s1 - rat(2, 1));
    }
}

#[test]
fn resultant_closed_form_agrees_with_sylvester() {
    for i in 0..100 {
        let phi = Sampler::new(12, i).map(2);
        let (rho, _, _) = rho_sigma_explicit(phi.point()).unwrap();
        assert_eq!(rho, phi.resultant());
    }
}

#[test]
fn pair_normal_form() {
    for i in 0..100 {
        let mut s = Sampler::new(13, i);
        let (m1, m2) = (s.rational(9, 5), s.rational(9, 5));
        if &m1 * &m2 == rat(1, 1) {
            continue;
        }
        let phi = normal_form_pair(&ExtElem::rational(m1.clone()), &ExtElem::rational(m2.clone())).unwrap();
        let one_minus = rat(1, 1) - &m1 * &m2;
        assert_eq!(phi.resultant().to_rational().unwrap(), one_minus);
        let m3 = (rat(2, 1) - &m1 - &m2) / &one_minus;
        let expect = (&m1 + &m2 + &m3, &m1 * &m2 + &m1 * &m3 + &m2 * &m3);
        assert_eq!(sigma_pair_rational(&phi).unwrap(), expect);
    }
}

#[test]
fn from_moduli_round_trip() {
    let mut cubic_fields = 0;
    for i in 0..100 {
        let mut s = Sampler::new(14, i);
        let (s1, s2) = (s.rational(20, 4), s.rational(20, 4));
        let phi = from_moduli(&s1, &s2).unwrap();
        assert_eq!(sigma_pair_rational(&phi).unwrap(), (s1, s2));
        if coefficient_field(&phi).is_some_and(|f| f.degree() == 3) {
            cubic_fields += 1;
        }
    }
    assert!(cubic_fields > 10, "irreducible multiplier cubics should be common");
}

#[test]
fn good_reduction_at_small_primes() {
    for p in [3u64, 5, 7] {
        for i in 0..50 {
            let mut s = Sampler::new(15 + p, i);
            let mut pick = || loop {
                let q = s.rational(30, 8);
                if valuation(&q, p).is_none_or(|v| v >= 0) {
                    return q;
                }
            };
            let (s1, s2) = (pick(), pick());
            let g = good_reduction_rep(&s1, &s2, p).unwrap_or_else(|e| panic!("({s1}, {s2}) at {p}: {e}"));
            assert_eq!(valuation(&g.resultant_norm, p), Some(0));
            assert_eq!(sigma_pair_rational(&g.map).unwrap(), (s1, s2));
        }
    }
}

#[test]
fn good_reduction_in_the_residue_cases() {
    // Multiplier cubics reducing to (T−1)³, (T−1)²(T−a) and T(T−1)² mod 3.
    for p in [3u64, 5, 7] {
        for s1 in -12..=12 {
            for s2 in -12..=12 {
                let (s1, s2) = (Rational::from_integer(s1.into()), Rational::from_integer(s2.into()));
                let g = good_reduction_rep(&s1, &s2, p).unwrap_or_else(|e| panic!("({s1}, {s2}) at {p}: {e}"));
                assert_eq!(valuation(&g.resultant_norm, p), Some(0));
            }
        }
    }
}
