mod common;

use common::{partition, permutation};
use partition_genus::reduction::{
    dual_fixed_points, fixed_points, is_reduced, reduce, reduce_with, removable_elements,
    remove_dual_fixed_point, remove_fixed_point, to_matching, ReductionKind,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn reduction_is_confluent(alpha in permutation(12), picks in proptest::collection::vec(any::<usize>(), 20)) {
        let (target, trace) = reduce(&alpha);
        prop_assert!(is_reduced(&target));
        prop_assert_eq!(trace.replay(&alpha).unwrap(), target.clone());
        let mut it = picks.into_iter().cycle();
        let (other, _) = reduce_with(&alpha, |opts| it.next().unwrap() % opts.len());
        prop_assert_eq!(other, target);
    }

    #[test]
    fn reductions_preserve_genus(alpha in permutation(12)) {
        prop_assume!(alpha.len() >= 2);
        let g = alpha.genus();
        for i in fixed_points(&alpha) {
            prop_assert_eq!(remove_fixed_point(&alpha, i).unwrap().genus(), g);
        }
        for i in dual_fixed_points(&alpha) {
            prop_assert_eq!(remove_dual_fixed_point(&alpha, i).unwrap().genus(), g);
        }
    }

    #[test]
    fn removable_count_matches(alpha in permutation(12)) {
        let (reduced, trace) = reduce(&alpha);
        prop_assert_eq!(removable_elements(&alpha).len(), alpha.len() - reduced.len());
        prop_assert_eq!(trace.len(), alpha.len() - reduced.len());
    }

    #[test]
    fn matching_round_trip(alpha in permutation(12)) {
        let mu = to_matching(&alpha);
        prop_assert_eq!(mu.to_permutation(), alpha.clone());
        prop_assert_eq!(mu.genus().unwrap(), alpha.genus());
        prop_assert_eq!(mu.is_reduced(), is_reduced(&alpha));
    }

    #[test]
    fn matching_reduction_commutes(p in partition(11)) {
        let (reduced, _) = reduce(&p);
        prop_assert_eq!(to_matching(&p).reduce().to_permutation(), reduced);
    }
}

#[test]
fn exhaustive_partitions_reduce_consistently() {
    for n in 1..=9 {
        for p in common::all_partitions(n) {
            let g = p.genus();
            let (reduced, trace) = reduce(&p);
            assert!(reduced.is_partition());
            assert_eq!(reduced.is_empty(), g.0 == 0, "{p}");
            let mut current = p.as_permutation().clone();
            for step in &trace.steps {
                current = match step.kind {
                    ReductionKind::FixedPoint => remove_fixed_point(&current, step.label),
                    ReductionKind::DualFixedPoint => remove_dual_fixed_point(&current, step.label),
                }
                .unwrap();
                assert!(
                    current.is_empty() || current.genus() == g,
                    "{p} at {step:?}"
                );
            }
        }
    }
}

#[test]
fn reduced_census_matches_direct_filter() {
    use partition_genus::enumerate::enumerate_partitions;
    for n in 1..=9 {
        let direct = common::all_partitions(n)
            .into_iter()
            .filter(|p| is_reduced(p))
            .count();
        let searched = enumerate_partitions(n, 13, |p| is_reduced(p))
            .unwrap()
            .len();
        assert_eq!(direct, searched, "n = {n}");
    }
}
