//! Randomized structural invariants.

use proptest::prelude::*;

use sitlab::perm::Permutation;
use sitlab::series::PowerSeries;
use sitlab::sit::{compose, decompose, tree_params};

fn arb_permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|mut w| {
                for v in &mut w {
                    *v += 1;
                }
                Permutation::new(w).unwrap()
            })
    })
}

fn arb_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    proptest::collection::vec(-50i64..50, 0..=order)
        .prop_map(move |c| PowerSeries::from_i64(&c, order))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn permutation_display_parse_round_trip(p in arb_permutation(40)) {
        let shown = p.to_string();
        let back: Permutation = shown.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn decompose_compose_identity(p in arb_permutation(40)) {
        let t = decompose(&p);
        prop_assert!(t.validate().is_ok());
        prop_assert_eq!(t.size(), p.size());
        prop_assert_eq!(compose(&t).unwrap(), p);
    }

    #[test]
    fn tree_params_are_consistent(p in arb_permutation(40)) {
        let t = decompose(&p);
        let params = tree_params(&t);
        prop_assert!(params.internal <= p.size().saturating_sub(1));
        prop_assert!(params.prime <= params.internal);
        // every leaf contributes at least 1 to the subtree size sum
        prop_assert!(params.subtree_size_sum >= p.size());
    }

    #[test]
    fn series_ring_laws(a in arb_series(12), b in arb_series(12), c in arb_series(12)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), PowerSeries::zero(12));
        prop_assert_eq!(a.mul(&PowerSeries::one(12)), a.clone());
    }

    #[test]
    fn series_quotient_inverts_mul(a in arb_series(12), b in arb_series(12)) {
        // quotient is defined whenever the divisor has a unit constant term
        let mut b = b;
        b.set_coeff(0, num_bigint::BigInt::from(1));
        let q = a.mul(&b).quotient(&b).unwrap();
        prop_assert_eq!(q, a);
    }
}
