mod common;

use common::reduced_partition;
use partition_genus::enumerate::enumerate_partitions;
use partition_genus::primitive::{
    class_endpoints, cyclic_arcs, is_primitive, is_semiprimitive, merge_parallel, parallel_classes,
    parallel_pairs, primitive_form, primitive_form_with, semiprimitive_form,
    semiprimitive_form_with, RepresentativeRule,
};
use partition_genus::reduction::is_reduced;
use proptest::prelude::*;

proptest! {
    #[test]
    fn projections_are_order_independent(
        alpha in reduced_partition(14),
        picks in proptest::collection::vec(any::<usize>(), 16),
    ) {
        let prim = primitive_form(&alpha).unwrap();
        let semi = semiprimitive_form(&alpha).unwrap();
        prop_assert!(prim.is_empty() || is_primitive(&prim).unwrap());
        prop_assert!(semi.is_empty() || is_semiprimitive(&semi).unwrap());
        prop_assert!(prim.is_empty() || prim.genus() == alpha.genus());
        prop_assert!(semi.is_empty() || semi.genus() == alpha.genus());
        let mut it = picks.iter().copied().cycle();
        prop_assert_eq!(primitive_form_with(&alpha, |ps| it.next().unwrap() % ps.len()).unwrap(), prim);
        let mut it = picks.into_iter().cycle();
        prop_assert_eq!(semiprimitive_form_with(&alpha, |ps| it.next().unwrap() % ps.len()).unwrap(), semi);
    }

    #[test]
    fn semiprimitive_classes_split_into_two_arcs(alpha in reduced_partition(14)) {
        prop_assume!(!alpha.is_empty());
        let semi = semiprimitive_form(&alpha).unwrap();
        prop_assume!(!semi.is_empty());
        let d = parallel_classes(&semi, &RepresentativeRule::default()).unwrap();
        let types = d.point_types.as_ref().unwrap();
        prop_assert_eq!(types.m0 + types.m1 + types.m2, semi.len());
        prop_assert_eq!(types.representatives.len(), d.p());
        for class in &d.classes {
            prop_assert!(class.len() <= 2);
            prop_assert_eq!(cyclic_arcs(&class_endpoints(class), semi.len()).len(), 2);
        }
    }
}

#[test]
fn merges_preserve_genus_exhaustively() {
    for n in 1..=9 {
        for alpha in enumerate_partitions(n, 13, |p| is_reduced(p)).unwrap() {
            for pair in parallel_pairs(&alpha).unwrap() {
                let merged = merge_parallel(&alpha, pair).unwrap();
                assert!(merged.is_partition());
                assert_eq!(merged.genus(), alpha.genus(), "{alpha} {pair}");
                assert_eq!(merged.len(), n - 2);
            }
        }
    }
}
