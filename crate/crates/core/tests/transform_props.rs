//! Property tests for the transform algebra: inverse pairs, linearity,
//! and agreement between independent constructions.

use proptest::collection::vec;
use proptest::prelude::*;

use seqlab_core::boustrophedon::{boustrophedon_by_convolution, boustrophedon_transform};
use seqlab_core::seq::{transform, TransformKind};
use seqlab_core::Int;

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn add(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

proptest! {
    #[test]
    fn differences_undo_partial_sums(v in vec(-1_000_000i64..1_000_000, 1..40)) {
        let a = ints(&v);
        let sums = transform(&a, TransformKind::PartialSums);
        let diffs = transform(&sums, TransformKind::Differences);
        prop_assert_eq!(&diffs[..], &a[1..]);
    }

    #[test]
    fn partial_sums_undo_differences_up_to_the_seed(v in vec(-1_000_000i64..1_000_000, 2..40)) {
        let a = ints(&v);
        let diffs = transform(&a, TransformKind::Differences);
        let sums = transform(&diffs, TransformKind::PartialSums);
        // Summing first differences recovers the sequence shifted down by its
        // first term, which is exactly the information differencing discards.
        for (n, s) in sums.iter().enumerate() {
            prop_assert_eq!(s, &(&a[n + 1] - &a[0]));
        }
    }

    #[test]
    fn binomial_round_trips_both_ways(v in vec(-1_000i64..1_000, 1..24)) {
        let a = ints(&v);
        let fwd = transform(&a, TransformKind::Binomial);
        prop_assert_eq!(transform(&fwd, TransformKind::InverseBinomial), a.clone());
        let bwd = transform(&a, TransformKind::InverseBinomial);
        prop_assert_eq!(transform(&bwd, TransformKind::Binomial), a);
    }

    #[test]
    fn binomial_is_linear(
        v in vec(-1_000i64..1_000, 1..20),
        w in vec(-1_000i64..1_000, 1..20),
    ) {
        let len = v.len().min(w.len());
        let a = ints(&v[..len]);
        let b = ints(&w[..len]);
        let joint = transform(&add(&a, &b), TransformKind::Binomial);
        let split = add(
            &transform(&a, TransformKind::Binomial),
            &transform(&b, TransformKind::Binomial),
        );
        prop_assert_eq!(joint, split);
    }

    #[test]
    fn inverse_moebius_spreads_a_delta_over_multiples(
        len in 1usize..60,
        seed in 0usize..60,
    ) {
        let k = seed % len + 1;
        let mut a = vec![Int::from(0); len];
        a[k - 1] = Int::from(1);
        let b = transform(&a, TransformKind::InverseMoebius);
        // With a_k the only nonzero term, b_n counts the divisors of n that
        // equal k, so b is the indicator of multiples of k.
        for (i, t) in b.iter().enumerate() {
            let expect = i64::from((i + 1) % k == 0);
            prop_assert_eq!(t, &Int::from(expect));
        }
    }

    #[test]
    fn boustrophedon_paths_agree(v in vec(-1_000_000i64..1_000_000, 1..25)) {
        let a = ints(&v);
        prop_assert_eq!(boustrophedon_transform(&a), boustrophedon_by_convolution(&a));
    }

    #[test]
    fn boustrophedon_is_linear(
        v in vec(-100_000i64..100_000, 1..20),
        w in vec(-100_000i64..100_000, 1..20),
    ) {
        let len = v.len().min(w.len());
        let a = ints(&v[..len]);
        let b = ints(&w[..len]);
        let joint = boustrophedon_transform(&add(&a, &b));
        let split = add(&boustrophedon_transform(&a), &boustrophedon_transform(&b));
        prop_assert_eq!(joint, split);
    }
}
