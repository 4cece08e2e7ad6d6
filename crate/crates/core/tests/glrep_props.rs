use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use branchkit::glrep::{act_gl2, act_gl3, branch_audit, contraction, dim_l3, embed_gl2, kernel_basis, nabla_kl, xi2_set, WeightGL2, WeightGL3};
use branchkit::verify::{central_character_check, nabla_equivariance, random_element, random_rational_gl};

fn weight() -> impl Strategy<Value = WeightGL3> {
    (0i64..=3, 0i64..=3).prop_map(|(p, m)| WeightGL3 { w1p: p, w1m: m, w2: 0 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_operator_is_equivariant(w in weight(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_rational_gl(&mut rng, 2);
        let p = random_element(&mut rng, &w).unwrap();
        let moved = act_gl3(&embed_gl2(&g), &p).unwrap();
        for k in 0..=w.w1p {
            for l in 0..=w.w1m {
                let lhs = nabla_kl(k, l, &moved).unwrap();
                let det = g.det().unwrap().pow(-(w.w1m - l)).unwrap();
                let target = WeightGL2 { n1: w.w1p - k + w.w1m - l, n2: 0 };
                let rhs = act_gl2(&g, &nabla_kl(k, l, &p).unwrap(), &target).unwrap().scale(&det);
                prop_assert!((&lhs - &rhs).is_zero(), "(k, l) = ({}, {})", k, l);
            }
        }
        prop_assert!(nabla_equivariance(&g, &p).unwrap());
    }

    #[test]
    fn action_preserves_the_kernel(w in weight(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_rational_gl(&mut rng, 3);
        let p = random_element(&mut rng, &w).unwrap();
        let moved = act_gl3(&g, &p).unwrap();
        prop_assert!(contraction(moved.poly(), &w).unwrap().is_zero());
    }

    #[test]
    fn central_character(w in weight(), seed in any::<u64>(), x in prop::sample::select(vec![-3i64, -2, 2, 3])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_element(&mut rng, &w).unwrap();
        prop_assert!(central_character_check(x, &p).unwrap());
        prop_assert!(central_character_check(x, &p.twist(1)).unwrap());
    }
}

#[test]
fn dimension_formula_matches_the_kernel() {
    for p in 0..=4 {
        for m in 0..=4 {
            let w = WeightGL3::new(p, m, 0).unwrap();
            assert_eq!(dim_l3(&w), kernel_basis(p as u32, m as u32).len() as u64, "({p}, {m})");
        }
    }
}

#[test]
fn audit_of_weight_one_one_one() {
    let a = branch_audit(&WeightGL3::new(1, 1, 1).unwrap()).unwrap();
    assert_eq!((a.dim_formula, a.dim_kernel, a.dim_sum, a.nabla_rank), (8, 8, 8, 8));
    let xi: Vec<(i64, i64)> = xi2_set(&WeightGL3::new(1, 1, 1).unwrap()).iter().map(|n| (n.n1, n.n2)).collect();
    assert_eq!(xi, vec![(0, 1), (1, 0), (1, 1), (2, 0)]);
}

#[test]
fn negative_weights_are_rejected() {
    assert!(WeightGL3::new(-1, 0, 0).is_err());
    assert!(WeightGL2::new(-1, 0).is_err());
}
