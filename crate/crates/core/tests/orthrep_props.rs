use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use branchkit::matrix::QMatrix;
use branchkit::orthrep::{
    cayley_so3, coordinates, is_orthogonal, matrix_m, reduce_mod_sphere, reduced_monomials, sigma, v3, OrthWeight3,
};
use branchkit::verify::{m_homomorphism, multiplicativity};
use branchkit::GaussianRational as G;

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=6).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn cayley() -> impl Strategy<Value = QMatrix> {
    (rational(), rational(), rational()).prop_map(|(a, b, c)| cayley_so3(&a, &b, &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cayley_points_are_rotations(u in cayley()) {
        prop_assert!(is_orthogonal(&u));
        prop_assert_eq!(u.det().unwrap(), G::from_int(1));
    }

    #[test]
    fn m_is_a_homomorphism(u in cayley(), v in cayley(), lambda in 0i64..=5, delta in 0u8..=1) {
        let w = OrthWeight3::new(lambda, delta).unwrap();
        prop_assert!(m_homomorphism(&w, &u, &v).unwrap());
    }

    #[test]
    fn m_inverts_along_the_inverse(u in cayley(), lambda in 0i64..=4) {
        let w = OrthWeight3::new(lambda, 0).unwrap();
        let m = matrix_m(&w, &u).unwrap();
        let mi = matrix_m(&w, &u.transpose()).unwrap();
        prop_assert_eq!(m.mul(&mi).unwrap(), QMatrix::identity(w.dim()));
    }
}

#[test]
fn multiplicativity_up_to_total_six() {
    for l1 in 0..=6 {
        for l2 in 0..=6 - l1 {
            assert!(multiplicativity(l1, l2).unwrap(), "({l1}, {l2})");
        }
    }
}

#[test]
fn reduced_dimension_and_invertible_basis_change() {
    for lambda in 0..=6 {
        assert_eq!(reduced_monomials(lambda).len() as i64, 2 * lambda + 1);
        for j in -lambda..=lambda {
            let c = coordinates(&v3(lambda, j).unwrap(), lambda).unwrap();
            for (k, x) in c.iter().enumerate() {
                let expect = if k as i64 == lambda - j { G::from_int(1) } else { G::zero() };
                assert_eq!(*x, expect);
            }
        }
    }
}

#[test]
fn reduction_is_idempotent_and_normal() {
    for lambda in 0..=5 {
        for j in -lambda..=lambda {
            let r = reduce_mod_sphere(&v3(lambda, j).unwrap()).unwrap();
            assert!(r.terms().all(|(e, _)| e[2] <= 1));
            assert!((&reduce_mod_sphere(&r).unwrap() - &r).is_zero());
        }
    }
}

#[test]
fn branching_is_complete() {
    for lambda in 0..=8 {
        for delta in 0..=1 {
            let w = OrthWeight3::new(lambda, delta).unwrap();
            let total: usize = sigma(&w).iter().map(|m| m.dim()).sum();
            assert_eq!(total, w.dim());
        }
    }
}
