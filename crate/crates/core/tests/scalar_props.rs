use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use branchkit::GaussianRational as G;

fn gaussian() -> impl Strategy<Value = G> {
    (-30i64..=30, 1i64..=12, -30i64..=30, 1i64..=12).prop_map(|(a, b, c, d)| {
        G::new(BigRational::new(BigInt::from(a), BigInt::from(b)), BigRational::new(BigInt::from(c), BigInt::from(d)))
    })
}

proptest! {
    #[test]
    fn inverse_is_an_involution(x in gaussian()) {
        prop_assume!(!x.is_zero());
        let inv = x.inverse().unwrap();
        prop_assert_eq!(inv.inverse().unwrap(), x.clone());
        prop_assert_eq!(inv * x, G::one());
    }

    #[test]
    fn powers_of_i_add(a in -8i64..=8, b in -8i64..=8) {
        prop_assert_eq!(G::power_of_i(a) * G::power_of_i(b), G::power_of_i(a + b));
        prop_assert_eq!(G::power_of_i(a), G::i().pow(a).unwrap());
    }

    #[test]
    fn ring_laws(x in gaussian(), y in gaussian(), z in gaussian()) {
        prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x * z);
    }

    #[test]
    fn text_round_trip(x in gaussian()) {
        let s = x.to_string();
        prop_assert_eq!(s.parse::<G>().unwrap(), x.clone());
        prop_assert_eq!(x.to_canonical(), s);
    }

    #[test]
    fn conjugate_gives_the_norm(x in gaussian()) {
        prop_assert_eq!(x.clone() * x.conj(), G::from_rational(x.norm_sqr()));
    }
}

#[test]
fn rendering_examples() {
    assert_eq!(G::from_int(3).to_string(), "3");
    assert_eq!(G::from_ints(0, -3).to_string(), "-3*i");
    assert_eq!(G::from_frac(3, 2).to_string(), "3/2");
    assert!(G::from_frac(1, 6).inverse().is_ok());
    assert!(G::zero().inverse().is_err());
}

#[test]
fn dyadic_membership() {
    assert!(G::from_frac(3, 8).in_z_half_i());
    assert!(!G::from_frac(1, 3).in_z_half_i());
}
