//! Algebraic laws of the exact kernels, checked with proptest.

use num::{BigInt, One, Zero};
use proptest::prelude::*;

use ratmap_core::linalg::{charpoly, det_bareiss, det_gauss};
use ratmap_core::poly::{factor_rational, BinaryForm, Poly};
use ratmap_core::ratmap::{MoebiusMatrix, RationalMap};
use ratmap_core::scalar::{adjoin_root, format_rational, parse_rational, rat, ExtensionField, Fp};
use ratmap_core::{ExtElem, Rational, Scalar};

fn q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

fn form(v: &[i64]) -> BinaryForm<Rational> {
    BinaryForm::new(q(v))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn cubic_field_elem() -> impl Strategy<Value = ExtElem> {
    prop::collection::vec(-6i64..=6, 3).prop_map(|c| {
        // Q(∛2).
        let field = ExtensionField::new(&Poly::from_i64s(&[-2, 0, 0, 1])).unwrap();
        field.element(Poly::new(q(&c)))
    })
}

fn check_field_axioms<S: Scalar>(a: S, b: S, c: S) -> Result<(), TestCaseError> {
    prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
    prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
    prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    if !a.is_zero() {
        prop_assert_eq!(a.clone() * a.inv().unwrap(), S::one());
    } else {
        prop_assert!(a.inv().is_err());
    }
    Ok(())
}

proptest! {
    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        check_field_axioms(a, b, c)?;
    }

    #[test]
    fn prime_field_axioms(a in -1000i128..1000, b in -1000i128..1000, c in -1000i128..1000) {
        check_field_axioms(Fp::<101>::new(a), Fp::<101>::new(b), Fp::<101>::new(c))?;
    }

    #[test]
    fn number_field_axioms(a in cubic_field_elem(), b in cubic_field_elem(), c in cubic_field_elem()) {
        check_field_axioms(a, b, c)?;
    }

    #[test]
    fn rational_text_round_trip(a in small_rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
    }

    #[test]
    fn resultant_symmetry_and_scaling(
        f in prop::collection::vec(-9i64..=9, 3..=4),
        g in prop::collection::vec(-9i64..=9, 2..=4),
        c in -5i64..=5,
    ) {
        let (f, g) = (form(&f), form(&g));
        let (d, e) = (f.degree(), g.degree());
        let sign = if (d * e) % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        prop_assert_eq!(f.resultant(&g).unwrap(), sign * g.resultant(&f).unwrap());
        let c = rat(c, 1);
        prop_assert_eq!(
            f.scale(&c).resultant(&g).unwrap(),
            c.pow(e as i32) * f.resultant(&g).unwrap()
        );
    }

    #[test]
    fn resultant_detects_common_factors(
        l in prop::collection::vec(-4i64..=4, 2),
        f in prop::collection::vec(-6i64..=6, 2..=3),
        g in prop::collection::vec(-6i64..=6, 2..=3),
        engineer in any::<bool>(),
    ) {
        let (mut f, mut g) = (form(&f), form(&g));
        let l = form(&l);
        prop_assume!(!l.is_zero() && !f.is_zero() && !g.is_zero());
        if engineer {
            f = f.mul(&l);
            g = g.mul(&l);
        }
        let res = f.resultant(&g).unwrap();
        let gcd = BinaryForm::gcd(&f, &g).unwrap();
        prop_assert_eq!(res.is_zero(), gcd.degree() >= 1 || f.coeff(0).is_zero() && g.coeff(0).is_zero());
        if engineer {
            prop_assert!(res.is_zero());
        }
    }

    #[test]
    fn factorization_reproduces_the_input(coeffs in prop::collection::vec(-9i64..=9, 2..=7)) {
        let p = Poly::new(q(&coeffs));
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let fz = factor_rational(&p).unwrap();
        let mut prod = Poly::constant(fz.unit.clone());
        for (f, e) in &fz.factors {
            prop_assert!(f.degree().unwrap() >= 1);
            prod = &prod * &f.pow(*e);
        }
        prop_assert_eq!(prod, p);
    }

    #[test]
    fn products_of_known_factors_split(
        a in prop::collection::vec(-5i64..=5, 3),
        b in prop::collection::vec(-5i64..=5, 3),
    ) {
        let (fa, fb) = (Poly::new(q(&a)), Poly::new(q(&b)));
        prop_assume!(fa.degree() == Some(2) && fb.degree() == Some(2));
        let count = |p: &Poly<Rational>| factor_rational(p).unwrap().factors.iter().map(|(_, e)| *e).sum::<u32>();
        prop_assert_eq!(count(&(&fa * &fb)), count(&fa) + count(&fb));
    }

    #[test]
    fn multiplicity_is_additive(
        f in prop::collection::vec(-5i64..=5, 2..=4),
        g in prop::collection::vec(-5i64..=5, 2..=4),
        x in -3i64..=3,
    ) {
        let (f, g) = (form(&f), form(&g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (xr, one) = (rat(x, 1), rat(1, 1));
        prop_assert_eq!(
            f.mul(&g).multiplicity_at(&xr, &one),
            f.multiplicity_at(&xr, &one) + g.multiplicity_at(&xr, &one)
        );
        let zero = rat(0, 1);
        prop_assert_eq!(
            f.mul(&g).multiplicity_at(&one, &zero),
            f.multiplicity_at(&one, &zero) + g.multiplicity_at(&one, &zero)
        );
    }

    #[test]
    fn determinants_agree(m in prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 4)) {
        let ints: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let rats: Vec<Vec<Rational>> = m.iter().map(|r| q(r)).collect();
        prop_assert_eq!(Rational::from_integer(det_bareiss(ints)), det_gauss(rats.clone()).unwrap());
        // det(T − A) at T = 0 is det(−A) = det(A) for even size.
        let cp = charpoly(&rats);
        prop_assert_eq!(cp[4].clone(), det_gauss(rats).unwrap());
    }

    #[test]
    fn conjugation_is_an_action(
        a in prop::collection::vec(-9i64..=9, 3),
        b in prop::collection::vec(-9i64..=9, 3),
        f in prop::collection::vec(-4i64..=4, 4),
        g in prop::collection::vec(-4i64..=4, 4),
    ) {
        let Ok(phi) = RationalMap::<Rational>::from_i64s(&a, &b) else { return Ok(()) };
        let Ok(f) = MoebiusMatrix::from_i64s(f[0], f[1], f[2], f[3]) else { return Ok(()) };
        let Ok(g) = MoebiusMatrix::from_i64s(g[0], g[1], g[2], g[3]) else { return Ok(()) };
        prop_assert_eq!(phi.conjugate(&f).unwrap().conjugate(&f.inverse()).unwrap(), phi.clone());
        prop_assert_eq!(
            phi.conjugate(&f).unwrap().conjugate(&g).unwrap(),
            phi.conjugate(&f.compose(&g)).unwrap()
        );
    }

    #[test]
    fn iteration_composes(
        a in prop::collection::vec(-5i64..=5, 3),
        b in prop::collection::vec(-5i64..=5, 3),
        m in 1u32..=2,
        n in 1u32..=2,
    ) {
        let Ok(phi) = RationalMap::<Rational>::from_i64s(&a, &b) else { return Ok(()) };
        prop_assert_eq!(
            phi.iterate(m + n).unwrap(),
            phi.iterate(m).unwrap().compose(&phi.iterate(n).unwrap())
        );
        prop_assert_eq!(phi.iterate(m).unwrap().degree(), 2usize.pow(m));
    }
}

#[test]
fn adjoining_a_root_of_a_split_polynomial_is_rational() {
    let r = adjoin_root(&Poly::from_i64s(&[-6, 1, 1])).unwrap();
    assert!(r.is_rational());
    assert!((r.clone() * r.clone() + r - ExtElem::from_i64(6)).is_zero());
    let s = adjoin_root(&Poly::from_i64s(&[-2, 0, 1])).unwrap();
    assert_eq!(s.clone() * s, ExtElem::from_i64(2));
    assert!(Rational::one() != Rational::zero());
}
