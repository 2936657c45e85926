//! Stability classification and the degree-2 boundary.

use num::Zero;
use ratmap_core::git::{
    boundary_inverse, boundary_normal_form, classify, find_witness, moduli_s_coordinate, phi_ab, Strictness, Verdict,
};
use ratmap_core::milnor2::ModuliPoint;
use ratmap_core::random::Sampler;
use ratmap_core::ratmap::RationalMapPoint;
use ratmap_core::scalar::rat;
use ratmap_core::{Error, ExtElem, Rational};

#[test]
fn maps_are_stable() {
    for d in 2..=4 {
        for i in 0..30 {
            let phi = Sampler::new(21, i).map(d);
            assert_eq!(classify(phi.point()).unwrap().verdict, Verdict::Stable);
        }
    }
}

#[test]
fn even_degree_tests_agree() {
    let mut seen = [0usize; 2];
    for d in [2usize, 4] {
        for i in 0..200 {
            let p = Sampler::new(22, i).degenerate_point(d);
            let unstable = find_witness(&p, Strictness::UnstableTest).unwrap().is_some();
            let not_stable = find_witness(&p, Strictness::NotStableTest).unwrap().is_some();
            assert_eq!(unstable, not_stable, "{p}");
            assert_ne!(classify(&p).unwrap().verdict, Verdict::SemistableNotStable);
            seen[unstable as usize] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "both outcomes should occur: {seen:?}");
}

#[test]
fn odd_degree_semistable_example() {
    let p = RationalMapPoint::<Rational>::from_i64s(&[0, 1, 0, 0], &[0, 0, 0, 1]).unwrap();
    assert_eq!(classify(&p).unwrap().verdict, Verdict::SemistableNotStable);
}

#[test]
fn classification_is_conjugation_invariant() {
    for d in 2..=3 {
        for i in 0..60 {
            let mut s = Sampler::new(23, i);
            let p = s.degenerate_point(d);
            let f = s.moebius(3);
            let q = p.conjugate(&f).unwrap();
            assert_eq!(classify(&p).unwrap().verdict, classify(&q).unwrap().verdict, "{p} vs {q}");
        }
    }
}

#[test]
fn witnesses_meet_their_thresholds() {
    for i in 0..100 {
        let p = Sampler::new(24, i).degenerate_point(3);
        for strictness in [Strictness::UnstableTest, Strictness::NotStableTest] {
            if let Some(w) = find_witness(&p, strictness).unwrap() {
                let (ta, tb) = strictness.thresholds(3);
                assert!(w.mult_h_q >= ta && w.mult_h_p >= tb);
                let (p0, p1) = w.p.coords();
                let (q0, q1) = w.q.coords();
                assert!(!(p0.clone() * q1.clone() - p1.clone() * q0.clone()).is_zero());
            }
        }
    }
}

#[test]
fn boundary_family() {
    for i in 0..50 {
        let mut s = Sampler::new(25, i);
        let (a, b) = (s.rational(9, 4), s.rational(9, 4));
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let p = phi_ab(&a, &b).unwrap();
        assert_eq!(classify(&p).unwrap().verdict, Verdict::Stable);
        assert!(p.resultant().unwrap().is_zero());
        let coord = moduli_s_coordinate(&p).unwrap();
        let expect = ModuliPoint::projective(&rat(0, 1), &(&a * &b), &(&a * &a + &b * &b)).unwrap();
        assert_eq!(coord, expect);
        let [x1, x2] = match &coord {
            ModuliPoint::Boundary { x1, x2 } => [x1.clone(), x2.clone()],
            _ => unreachable!(),
        };
        // {[t:1], [1:t]} must contain [A:B] (as a projective point).
        let pair = boundary_inverse(&x1, &x2).unwrap();
        let (ae, be) = (ExtElem::rational(a.clone()), ExtElem::rational(b.clone()));
        let hit = pair.iter().any(|pt| {
            let (u, v) = pt.coords();
            (u.clone() * be.clone() - v.clone() * ae.clone()).is_zero()
        });
        assert!(hit, "[{a}:{b}] not recovered from {coord:?}");
    }
}

#[test]
fn unstable_boundary_point() {
    let p = RationalMapPoint::<Rational>::from_i64s(&[0, 0, 0], &[0, 1, 0]).unwrap();
    assert_eq!(classify(&p).unwrap().verdict, Verdict::Unstable);
    assert_eq!(boundary_normal_form(&p).unwrap_err(), Error::NotStable);
    assert_eq!(moduli_s_coordinate(&p).unwrap_err(), Error::AllZero);
}

#[test]
fn normal_form_preserves_the_moduli_coordinate() {
    let mut done = 0;
    for i in 0..300 {
        let mut s = Sampler::new(26, i);
        let p = s.degenerate_point(2);
        if classify(&p).unwrap().verdict != Verdict::Stable {
            continue;
        }
        let bf = boundary_normal_form(&p).unwrap();
        assert_eq!(bf.coordinate().unwrap(), moduli_s_coordinate(&p).unwrap(), "{p}");
        let f = s.moebius(3);
        let q = p.conjugate(&f).unwrap();
        assert_eq!(moduli_s_coordinate(&q).unwrap(), moduli_s_coordinate(&p).unwrap());
        done += 1;
    }
    assert!(done > 50);
}
