use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use branchkit::escoh::closed_form::trinomial;
use branchkit::escoh::pairing::{cup_constants, cup_pairing_check};
use branchkit::escoh::script_p::build_script_p;
use branchkit::escoh::wedge::{omega_equivariance_check, p_tilde_block_check, WedgeForm};
use branchkit::glrep::WeightGL2;
use branchkit::lfactors::{main_constant, PiParams};
use branchkit::matrix::QMatrix;
use branchkit::orthrep::cayley_so3;
use branchkit::poly::{MultiPoly, VariableSet};
use branchkit::verify::{pairing_equivariance, pairing_ts, random_rational_gl};
use branchkit::GaussianRational as G;

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=6).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn cayley() -> impl Strategy<Value = QMatrix> {
    (rational(), rational(), rational()).prop_map(|(a, b, c)| cayley_so3(&a, &b, &c))
}

fn xy_poly(degree: i64) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-4i64..=4, -4i64..=4), (degree + 1) as usize).prop_map(move |cs| {
        let d = degree as u32;
        MultiPoly::from_terms(
            &branchkit::glrep::gl2_vars(),
            cs.into_iter().enumerate().map(|(i, (a, b))| (vec![i as u32, d - i as u32], G::from_ints(a, b))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn omega_forms_are_equivariant(u in cayley()) {
        for i in [2, 3] {
            prop_assert!(omega_equivariance_check(i, &u).unwrap());
            prop_assert!(p_tilde_block_check(i, &u).unwrap());
        }
    }

    #[test]
    fn wedge_is_graded_commutative(a in 0usize..5, b in 0usize..5, c in 0usize..5) {
        let f = |k| WedgeForm::<G>::one_form(k);
        let ab = f(a).wedge(&f(b));
        prop_assert_eq!(ab.clone(), f(b).wedge(&f(a)).scale(&G::from_int(-1)));
        prop_assert_eq!(ab.wedge(&f(c)), f(a).wedge(&f(b).wedge(&f(c))));
        if a == b {
            prop_assert!(ab.is_zero());
        }
    }

    #[test]
    fn pairing_is_equivariant((n1, p, q) in (0i64..=4).prop_flat_map(|d| (Just(d), xy_poly(d), xy_poly(d))), n2 in -2i64..=2, seed in any::<u64>()) {
        let g = random_rational_gl(&mut ChaCha8Rng::seed_from_u64(seed), 2);
        let n = WeightGL2 { n1, n2 };
        prop_assert!(pairing_equivariance(&n, &g, &p, &q).unwrap());
    }

    #[test]
    fn trinomial_matches_expansion(e in 0i64..=6, i in 0i64..=6, j in 0i64..=6) {
        let v = VariableSet::new(&["X", "Y", "Z"]);
        let s = (0..3).fold(MultiPoly::zero(&v), |acc, k| &acc + &MultiPoly::var_idx(&v, k));
        let k = e - i - j;
        let expect = if k >= 0 { s.pow(e as u32).coeff(&[i as u32, j as u32, k as u32]) } else { G::zero() };
        prop_assert_eq!(G::from_bigint(trinomial(e, i, j, k)), expect);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn script_p_is_equivariant(u in cayley()) {
        for lambda3 in [3, 5] {
            prop_assert!(build_script_p(lambda3, 0).unwrap().equivariance_check(&u).unwrap());
        }
    }
}

#[test]
fn script_p_coefficients_are_dyadic() {
    for lambda3 in [3, 5, 7] {
        let sp = build_script_p(lambda3, 0).unwrap();
        assert!(sp.coefficients_dyadic());
        assert!(sp.all_harmonic().unwrap());
    }
}

#[test]
fn t_against_s() {
    for n1 in 0..=6 {
        assert!(pairing_ts(n1).unwrap());
    }
}

#[test]
fn cup_constants_at_two_eight() {
    let c5 = cup_constants(9, 0, 2, 5).unwrap();
    assert_eq!((c5.c.clone(), c5.prefactor.clone(), c5.sign_flip), (BigInt::from(3), G::from_int(-1), -1));
    let c6 = cup_constants(9, 0, 2, 6).unwrap();
    assert_eq!((c6.c.clone(), c6.prefactor.clone(), c6.sign_flip), (BigInt::from(3), G::i(), 1));
    let sp = build_script_p(9, 0).unwrap();
    assert!(cup_pairing_check(&sp, 2, 5).unwrap());
    assert!(cup_pairing_check(&sp, 2, 6).unwrap());
    assert!(cup_constants(9, 0, 2, 7).is_err());
}

#[test]
fn sign_flip_matches_parity() {
    for l3 in (2..=12).step_by(2) {
        for l2 in 1..l3 {
            for delta in 0..=1u8 {
                let pp = PiParams::new(l2, l3, delta).unwrap();
                for m in pp.critical_points() {
                    let c = cup_constants(l3 + 1, delta, l2, m).unwrap();
                    assert_eq!(c.sign_flip, main_constant(&pp, m).unwrap().parity, "({l2}, {l3}, {delta}, {m})");
                }
            }
        }
    }
}
