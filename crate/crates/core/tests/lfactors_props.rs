use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use branchkit::lfactors::{
    dual, epsilon_exponent, gamma_c, gamma_factor, gamma_r, main_constant, tensor, GammaFactor, GammaKind, PiParams, WeilParameter,
    WeilSummand,
};
use branchkit::GaussianRational as G;

fn half(n: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

fn summand() -> impl Strategy<Value = WeilSummand> {
    prop_oneof![
        (-8i64..=8, 0u8..=1).prop_map(|(n, d)| WeilSummand::dim1(half(n), d).unwrap()),
        (-8i64..=8, 1i64..=9).prop_map(|(n, l)| WeilSummand::dim2(half(n), l).unwrap()),
    ]
}

fn parameter() -> impl Strategy<Value = WeilParameter> {
    prop::collection::vec(summand(), 1..=3).prop_map(WeilParameter::new)
}

fn pair() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=10).prop_flat_map(|h| (1..2 * h, Just(2 * h)))
}

proptest! {
    #[test]
    fn critical_region_three_ways((l2, l3) in pair(), delta in 0u8..=1) {
        let pp = PiParams::new(l2, l3, delta).unwrap();
        let a = pp.critical_points();
        prop_assert_eq!(&a, &pp.critical_points_by_poles());
        prop_assert_eq!(&a, &pp.critical_points_by_hodge());
        for m in a.first().copied().unwrap_or(0) - 3..=a.last().copied().unwrap_or(0) + 3 {
            prop_assert_eq!(pp.is_critical(m), a.contains(&m));
            prop_assert_eq!(main_constant(&pp, m).is_ok(), a.contains(&m));
        }
    }

    #[test]
    fn duplication_on_poles(a in -12i64..=12, s in -60i64..=60) {
        let (a, s) = (half(a), half(s));
        let r1 = GammaFactor { kind: GammaKind::R, shift: a.clone() };
        let r2 = GammaFactor { kind: GammaKind::R, shift: a.clone() + BigRational::from_integer(1.into()) };
        let c = GammaFactor { kind: GammaKind::C, shift: a };
        prop_assert_eq!(r1.has_pole_at(&s) || r2.has_pole_at(&s), c.has_pole_at(&s));
    }

    #[test]
    fn dual_is_an_involution(p in parameter()) {
        prop_assert_eq!(dual(&dual(&p)), p.clone());
        prop_assert_eq!(dual(&p).dim(), p.dim());
    }

    #[test]
    fn tensor_is_symmetric_and_commutes_with_dual(p in parameter(), q in parameter()) {
        match (tensor(&p, &q), tensor(&q, &p)) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(&a, &b);
                prop_assert_eq!(a.dim(), p.dim() * q.dim());
                prop_assert_eq!(dual(&a), tensor(&dual(&p), &dual(&q)).unwrap());
            }
            (a, b) => prop_assert!(a.is_err() && b.is_err()),
        }
    }

    #[test]
    fn gamma_factor_degree_matches_dimension(p in parameter()) {
        let deg: usize = gamma_factor(&p).factors().iter().map(|f| match f.kind { GammaKind::R => 1, GammaKind::C => 2 }).sum();
        prop_assert_eq!(deg, p.dim());
        prop_assert!((0..4).contains(&epsilon_exponent(&p)));
    }
}

#[test]
fn gamma_values() {
    let pi = std::f64::consts::PI;
    assert!((gamma_r(1.0) - 1.0).abs() < 1e-12);
    assert!((gamma_c(1.0) - 1.0 / pi).abs() < 1e-12);
    assert!((gamma_c(2.0) - 1.0 / (2.0 * pi * pi)).abs() < 1e-12);
}

#[test]
fn equal_weights_are_rejected() {
    let p = WeilParameter::new(vec![WeilSummand::dim2(half(0), 4).unwrap()]);
    assert!(tensor(&p, &p).is_err());
}

#[test]
fn spot_values() {
    for (l2, l3, want) in [(2, 8, vec![5, 6]), (4, 6, vec![5, 6]), (2, 4, vec![3, 4])] {
        assert_eq!(PiParams::new(l2, l3, 0).unwrap().critical_points(), want);
    }
    let c = main_constant(&PiParams::new(2, 8, 0).unwrap(), 5).unwrap();
    assert_eq!((c.parity, c.scalar), (-1, G::from_int(3)));
    assert!(PiParams::new(3, 3, 0).is_err());
    assert!(PiParams::new(8, 8, 0).is_err());
}
