use minfaith_core::cyclo::{rational, Cyclotomic};
use proptest::prelude::*;

fn element(n: u32, coeffs: &[i64]) -> Cyclotomic {
    coeffs
        .iter()
        .enumerate()
        .fold(Cyclotomic::zero(n), |acc, (e, &c)| {
            acc + Cyclotomic::root_of_unity(n, e as i64).scale(&rational(c, 1))
        })
}

fn conductor() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 2, 3, 4, 5, 8, 9, 12, 15])
}

proptest! {
    #[test]
    fn ring_laws(n in conductor(), a in prop::collection::vec(-3i64..4, 0..6), b in prop::collection::vec(-3i64..4, 0..6), c in prop::collection::vec(-3i64..4, 0..6)) {
        let (x, y, z) = (element(n, &a), element(n, &b), element(n, &c));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn galois_is_a_ring_map(n in conductor(), a in prop::collection::vec(-3i64..4, 0..6), b in prop::collection::vec(-3i64..4, 0..6), k in 1i64..40) {
        prop_assume!(num_integer::gcd(k, n as i64) == 1);
        let (x, y) = (element(n, &a), element(n, &b));
        prop_assert_eq!((&x * &y).galois(k).unwrap(), &x.galois(k).unwrap() * &y.galois(k).unwrap());
        prop_assert_eq!((&x + &y).galois(k).unwrap(), &x.galois(k).unwrap() + &y.galois(k).unwrap());
    }

    #[test]
    fn inverse(n in conductor(), a in prop::collection::vec(-3i64..4, 1..6)) {
        let x = element(n, &a);
        prop_assume!(!x.is_zero());
        prop_assert_eq!(&x * &x.inv().unwrap(), Cyclotomic::one(n));
    }

    #[test]
    fn lift_preserves_value(n in conductor(), a in prop::collection::vec(-3i64..4, 0..6), m in 1u32..4) {
        let x = element(n, &a);
        let y = element(n * m, &[1]);
        prop_assert_eq!(&x.lift(n * m) * &y, &x * &y);
    }
}
