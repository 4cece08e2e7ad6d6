use num_traits::Zero;
use proptest::prelude::*;

use branchkit::poly::{expand_power, MultiPoly, VariableSet};
use branchkit::ratfun::RationalFunction;
use branchkit::GaussianRational as G;

fn xy() -> VariableSet {
    VariableSet::new(&["X", "Y"])
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..=3, 0u32..=3, -5i64..=5, -5i64..=5), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(&xy(), terms.into_iter().map(|(i, j, a, b)| (vec![i, j], G::from_ints(a, b)))))
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_derivatives_commute(p in poly()) {
        let a = p.partial_derivative("X", 1).unwrap().partial_derivative("Y", 1).unwrap();
        let b = p.partial_derivative("Y", 1).unwrap().partial_derivative("X", 1).unwrap();
        prop_assert!((&a - &b).is_zero());
    }

    #[test]
    fn substitution_commutes_with_powers(p in poly(), e in 0u32..=3) {
        let v = xy();
        let x = MultiPoly::var(&v, "X").unwrap();
        let y = MultiPoly::var(&v, "Y").unwrap();
        let bind = [("X", &x + &y), ("Y", x.scale(&G::from_ints(1, 2)))];
        let lhs = expand_power(&p, e).substitute(&bind, &v).unwrap();
        let rhs = expand_power(&p.substitute(&bind, &v).unwrap(), e);
        prop_assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn power_matches_repeated_product(p in poly(), e in 0u32..=3) {
        let mut acc = MultiPoly::one(&xy());
        for _ in 0..e {
            acc = &acc * &p;
        }
        prop_assert!((&acc - &p.pow(e)).is_zero());
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let q = MultiPoly::parse(&p.to_string(), &xy()).unwrap();
        prop_assert!((&p - &q).is_zero());
    }

    #[test]
    fn rational_function_equality_is_an_equivalence(p in poly(), q in nonzero_poly(), r in nonzero_poly(), s in nonzero_poly()) {
        let a = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let b = RationalFunction::new(&p * &r, &q * &r).unwrap();
        let c = RationalFunction::new(&(&p * &r) * &s, &(&q * &r) * &s).unwrap();
        prop_assert!(a == a.clone());
        prop_assert!(a == b && b == a);
        prop_assert!(b == c && a == c);
    }
}

#[test]
fn lexicographic_rendering_is_stable() {
    let v = xy();
    let p = MultiPoly::parse("Y^2 + 2*X*Y - X^2", &v).unwrap();
    assert_eq!(p.to_string(), MultiPoly::parse(&p.to_string(), &v).unwrap().to_string());
}

#[test]
fn zero_denominator_is_rejected() {
    let v = xy();
    assert!(RationalFunction::new(MultiPoly::one(&v), MultiPoly::zero(&v)).is_err());
}
