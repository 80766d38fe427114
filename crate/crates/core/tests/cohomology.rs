mod common;

use proptest::prelude::*;
use ptolemy::cohomology::{
    change_coefficients, class_from_lifts, class_from_lifts_in, euler_basis, pushforward, scalar_group_order,
    CoefficientMap, Coefficients, CohomologyError, ExtensionClass, LiftData,
};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn main_class() {
    let c = class_from_lifts(&LiftData::new(12, vec![1, 1, 1, 1]), 3, 4).unwrap();
    assert_eq!(c.chi_coeff, 12);
    assert_eq!(c.euler_coeffs, vec![1, 1, 1, 1]);
    assert_eq!(c.to_string(), "12*chi + 1*e1 + 1*e2 + 1*e3 + 1*e4 (A = Z)");
    assert_eq!(c.chi_order(), None);
}

#[test]
fn trivial_class() {
    for (g, s) in [(2, 0), (3, 2), (5, 1)] {
        let c = class_from_lifts(&LiftData::new(0, vec![0; s]), g, s).unwrap();
        assert!(c.is_trivial());
        assert_eq!(c.to_string(), "0 (A = Z)");
    }
}

#[test]
fn genus_two() {
    let c = class_from_lifts(&LiftData::new(12, vec![1]), 2, 1).unwrap();
    assert_eq!(c.chi_coeff, 2);
    assert_eq!(c.chi_order(), Some(10));
    let d = change_coefficients(&c, CoefficientMap::Divisible).unwrap();
    assert_eq!((d.chi_coeff, d.euler_coeffs.clone()), (0, vec![1]));
}

#[test]
fn coefficient_changes() {
    let c = class_from_lifts(&LiftData::new(12, vec![1, 1, 1]), 3, 3).unwrap();
    assert_eq!(change_coefficients(&c, CoefficientMap::Divisible).unwrap(), c);
    let e = ExtensionClass::new(3, 12, vec![1], Coefficients::Z).unwrap();
    let r = change_coefficients(&e, CoefficientMap::Reduce(2)).unwrap();
    assert_eq!((r.chi_coeff, r.euler_coeffs.clone()), (0, vec![1]));
    assert_eq!(r.to_string(), "1*e1 (A = Z/2)");
    assert!(matches!(change_coefficients(&e, CoefficientMap::Reduce(0)), Err(CohomologyError::UnsupportedMap(_))));
    let finite = ExtensionClass::new(3, 1, vec![1], Coefficients::cyclic(5)).unwrap();
    assert!(matches!(change_coefficients(&finite, CoefficientMap::Divisible), Err(CohomologyError::UnsupportedMap(_))));
}

#[test]
fn pushforward_examples() {
    let basis = euler_basis(4);
    assert_eq!(pushforward(&basis, &[1, 1, 1, 1]).unwrap(), vec![1, 1, 1, 1]);
    assert_eq!(pushforward(&basis, &[0, 0, 0, 0]).unwrap(), vec![0, 0, 0, 0]);
    assert_eq!(pushforward(&basis, &[0, 0, 1, 0]).unwrap(), vec![0, 0, 1, 0]);
    assert!(matches!(pushforward(&basis, &[1, 1]), Err(CohomologyError::LengthMismatch(4, 2))));
    assert!(matches!(pushforward(&[vec![1], vec![1, 0]], &[1, 1]), Err(CohomologyError::LengthMismatch(..))));
}

#[test]
fn scalar_orders() {
    assert_eq!(scalar_group_order(None), None);
    assert_eq!(scalar_group_order(Some(6)), Some(1));
    assert_eq!(scalar_group_order(Some(12)), Some(2));
    for m in 1..200u64 {
        assert_eq!(scalar_group_order(Some(m)), Some(m / gcd(m, 6)));
    }
}

#[test]
fn input_errors() {
    assert!(matches!(class_from_lifts(&LiftData::new(12, vec![1]), 3, 2), Err(CohomologyError::LengthMismatch(1, 2))));
    assert!(matches!(class_from_lifts(&LiftData::new(12, vec![]), 1, 0), Err(CohomologyError::BadGenus(1))));
    let mut d = LiftData::new(12, vec![]);
    d.lantern_exp = 2;
    assert!(matches!(class_from_lifts(&d, 3, 0), Err(CohomologyError::NotNormalized(_))));
}

#[test]
fn finite_coefficients() {
    let a = Coefficients::cyclic(2);
    let c = class_from_lifts_in(&LiftData::new(12, vec![1, 3]), 3, 2, a).unwrap();
    assert_eq!((c.chi_coeff, c.euler_coeffs.clone()), (0, vec![1, 1]));
    let c = class_from_lifts_in(&LiftData::new(12, vec![]), 2, 0, Coefficients::cyclic(4)).unwrap();
    // Z/10 and Z/4 meet in Z/2
    assert_eq!((c.chi_order(), c.chi_coeff), (Some(2), 0));
}

proptest! {
    #![proptest_config(common::config(1000))]

    #[test]
    fn classes_are_additive(
        g in 2u32..6,
        x in -50i64..50, y in -50i64..50,
        p in prop::collection::vec(-20i64..20, 0..5),
        q0 in prop::collection::vec(-20i64..20, 5),
    ) {
        let s = p.len();
        let q = q0[..s].to_vec();
        let a = LiftData::new(x, p.clone());
        let b = LiftData::new(y, q.clone());
        let sum = (&a + &b).unwrap();
        let ca = class_from_lifts(&a, g, s).unwrap();
        let cb = class_from_lifts(&b, g, s).unwrap();
        let cs = class_from_lifts(&sum, g, s).unwrap();
        let m = if g == 2 { 10 } else { i64::MAX };
        let red = |v: i64| if g == 2 { v.rem_euclid(10) } else { v };
        prop_assert_eq!(cs.chi_coeff, red(ca.chi_coeff + cb.chi_coeff));
        prop_assert!(cs.chi_coeff < m);
        let e: Vec<i64> = ca.euler_coeffs.iter().zip(&cb.euler_coeffs).map(|(u, v)| u + v).collect();
        prop_assert_eq!(cs.euler_coeffs, e);
    }

    #[test]
    fn euler_part_is_injective(
        g in 2u32..6,
        c in -30i64..30,
        a in prop::collection::vec(-9i64..9, 1..5),
        b0 in prop::collection::vec(-9i64..9, 5),
    ) {
        let b = b0[..a.len()].to_vec();
        let ca = class_from_lifts(&LiftData::new(c, a.clone()), g, a.len()).unwrap();
        let cb = class_from_lifts(&LiftData::new(c, b.clone()), g, a.len()).unwrap();
        prop_assert_eq!(ca == cb, a == b);
        prop_assert_eq!(pushforward(&euler_basis(a.len()), &a).unwrap(), ca.euler_coeffs);
    }

    #[test]
    fn genus_two_kernel(k in -1000i64..1000, g in 2u32..8) {
        let c = class_from_lifts(&LiftData::new(k, vec![]), g, 0).unwrap();
        prop_assert_eq!(c.chi_coeff == 0, if g == 2 { k % 10 == 0 } else { k == 0 });
    }

    #[test]
    fn reduction_is_componentwise(
        n in 1u64..40,
        c in -100i64..100,
        e in prop::collection::vec(-100i64..100, 0..5),
        g in 3u32..6,
    ) {
        let x = ExtensionClass::new(g, c, e.clone(), Coefficients::Z).unwrap();
        let r = change_coefficients(&x, CoefficientMap::Reduce(n)).unwrap();
        prop_assert_eq!(r.chi_coeff, c.rem_euclid(n as i64));
        let want: Vec<i64> = e.iter().map(|v| v.rem_euclid(n as i64)).collect();
        prop_assert_eq!(r.euler_coeffs, want);
    }
}
