use nalgebra::Matrix3;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use branchkit::geom::{
    df_matrix_check, f_matrix, iota_report, iwasawa_gl3, left_jacobian, left_jacobian_numeric_deviation, left_jacobian_symbolic,
    q_matrix_mismatches, random_well_conditioned,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn iwasawa_round_trip(seed in any::<u64>()) {
        let g = random_well_conditioned(&mut ChaCha8Rng::seed_from_u64(seed), 1e3);
        let d = iwasawa_gl3(&g, 1e-12).unwrap();
        prop_assert!(d.reconstruction_residual < 1e-10);
        prop_assert!(d.orthogonality_residual < 1e-10);
        prop_assert!(d.coords.y1 > 0.0 && d.coords.y2 > 0.0 && d.coords.scale > 0.0);
        let k = Matrix3::from_fn(|r, c| d.k[r][c]);
        let back = d.coords.f_matrix() * d.coords.scale * k;
        prop_assert!((back - g).norm() / g.norm() < 1e-10);
    }

    #[test]
    fn coordinates_of_f_are_recovered(y1 in 0.1f64..5.0, y2 in 0.1f64..5.0, x1 in -3.0f64..3.0, x2 in -3.0f64..3.0, x3 in -3.0f64..3.0) {
        let c = [y1, y2, x1, x2, x3];
        let d = iwasawa_gl3(&f_matrix(&c), 1e-12).unwrap();
        let got = d.coords.as_array();
        for k in 0..5 {
            prop_assert!((got[k] - c[k]).abs() < 1e-9, "coordinate {} : {} vs {}", k, got[k], c[k]);
        }
    }

    #[test]
    fn left_jacobian_by_finite_differences(y1 in 0.5f64..3.0, y2 in 0.5f64..3.0, x1 in -2.0f64..2.0, x2 in -2.0f64..2.0, x3 in -2.0f64..2.0) {
        prop_assert!(left_jacobian_numeric_deviation(&[y1, y2, x1, x2, x3], 1e-5).unwrap() < 1e-7);
    }
}

#[test]
fn singular_matrices_are_rejected() {
    assert!(iwasawa_gl3(&Matrix3::zeros(), 1e-12).is_err());
}

#[test]
fn df_matches_the_derived_matrix() {
    let c = df_matrix_check(1e-5).unwrap();
    assert!(c.deviation_derived < 1e-7, "{c:?}");
    assert!(c.so3_response < 1e-7, "{c:?}");
    assert!(c.deviation_displayed > 1.0, "{c:?}");
}

#[test]
fn left_jacobian_is_exact() {
    let s = left_jacobian_symbolic().unwrap();
    let j = left_jacobian();
    assert!((0..5).all(|r| (0..5).all(|c| s.get(r, c) == j.get(r, c))));
}

#[test]
fn q_matrices_are_exact() {
    assert!(q_matrix_mismatches(2).unwrap().is_empty());
    assert!(q_matrix_mismatches(3).unwrap().is_empty());
}

#[test]
fn iota_pullback_identities() {
    let r = iota_report().unwrap();
    assert!(r.odd_vanish && r.omega0 && r.haar && r.sign_invariant, "{r:?}");
    assert_eq!(r.omega_pm2_derived[0][2], "0");
    assert!(!r.omega_pm2);
}
