mod common;

use std::io::BufReader;

use partition_genus::enumerate::{
    census_genera, enumerate_catalogue, enumerate_primitive, primitive_size_bound, read_catalogue,
    semiprimitive_by_filter, write_catalogue, EntryKind, SearchOptions,
};
use partition_genus::primitive::{is_primitive, is_semiprimitive};
use partition_genus::reduction::is_reduced;

#[test]
fn census_matches_direct_count() {
    let census = census_genera(9, &[0, 1, 2], 13).unwrap();
    for n in 1..=9 {
        let mut direct = std::collections::BTreeMap::new();
        for p in common::all_partitions(n) {
            *direct.entry((p.block_count(), p.genus().0)).or_insert(0u64) += 1;
        }
        for k in 1..=n {
            for g in 0..=2 {
                let want = direct.get(&(k, g)).copied().unwrap_or(0);
                assert_eq!(census.get(n, k, g), want.into(), "({n},{k},{g})");
            }
        }
    }
}

#[test]
fn primitives_respect_size_bound_and_definition() {
    let opts = SearchOptions::default();
    for g in 1..=2 {
        let bound = primitive_size_bound(g);
        assert_eq!(bound, 6 * (2 * g as usize - 1));
        for e in enumerate_primitive(g, &opts).unwrap() {
            let rep = &e.representative;
            assert!(rep.len() <= bound);
            assert!(is_reduced(rep) && is_primitive(rep).unwrap());
            assert_eq!(rep.genus().0, g);
        }
    }
}

#[test]
fn genus_two_primitives_fall_in_four_cases() {
    for e in enumerate_primitive(2, &SearchOptions::default()).unwrap() {
        let big: Vec<usize> = e.cycle_type.iter().copied().filter(|&s| s != 2).collect();
        let n = e.m;
        let ok = match big.as_slice() {
            [] => n <= 18,
            [3] => n <= 15,
            [3, 3] => n <= 12,
            [4] => n <= 12,
            _ => false,
        };
        assert!(ok, "{} has cycle type {:?}", e.representative, e.cycle_type);
    }
}

#[test]
fn genus_two_catalogue_invariants() {
    let all = enumerate_catalogue(2, &SearchOptions::default()).unwrap();
    for e in &all {
        e.validate().unwrap();
        assert_eq!(e.m0, 0, "{}", e.representative);
        assert!(is_semiprimitive(&e.representative).unwrap());
        assert_eq!(e.m % e.orbit_size, 0);
    }
    for n in [10, 12] {
        let direct = semiprimitive_by_filter(n, 2).len();
        let searched: usize = all
            .iter()
            .filter(|e| e.m == n && e.kind == EntryKind::SemiprimitiveOnly)
            .map(|e| e.orbit_size)
            .sum();
        assert_eq!(direct, searched, "n = {n}");
    }
    let mut buf = Vec::new();
    write_catalogue(&all, &mut buf).unwrap();
    let back = read_catalogue(BufReader::new(buf.as_slice())).unwrap();
    assert_eq!(back, all);
}
