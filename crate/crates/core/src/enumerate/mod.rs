//! Exhaustive enumeration: the brute-force census, the primitive and
//! semiprimitive catalogues, and cyclic orbits.

mod catalogue;
mod census;
pub(crate) mod search;

pub use catalogue::{
    canonical_representative, cycle_splits, cyclic_orbits, enumerate_catalogue,
    enumerate_primitive, enumerate_semiprimitive, primitive_partitions_of_size,
    primitive_size_bound, read_catalogue, semiprimitive_by_filter, semiprimitive_from,
    totals_by_cycle_type, write_catalogue, CatalogueEntry, EntryKind, Orbit, SearchOptions,
};
pub use census::{census, census_genera, narayana, Census, Provenance};
pub use search::MAX_SEARCH_N;

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use search::{search, Constraints};

/// Every set partition of `{1..n}` accepted by `predicate`, in increasing
/// order of image sequence.
pub fn enumerate_partitions(
    n: usize,
    limit: usize,
    predicate: impl Fn(&Partition) -> bool + Sync,
) -> Result<Vec<Partition>> {
    if n > limit.min(MAX_SEARCH_N) {
        return Err(Error::LimitExceeded {
            n,
            limit: limit.min(MAX_SEARCH_N),
        });
    }
    let mut found: Vec<Partition> = search(
        &Constraints::all(n),
        Vec::new,
        |acc: &mut Vec<Partition>, leaf| {
            let p = Partition::new_unchecked(Permutation::from_raw(leaf.to_images()));
            if predicate(&p) {
                acc.push(p);
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let g1 = enumerate_partitions(4, 13, |p| p.genus().0 == 1).unwrap();
        assert_eq!(g1.len(), 1);
        assert_eq!(g1[0].to_string(), "(1,3)(2,4)");
        let six =
            enumerate_partitions(6, 13, |p| p.genus().0 == 2 && p.block_count() == 2).unwrap();
        assert_eq!(six.len(), 1);
        assert_eq!(
            enumerate_partitions(5, 13, |p| p.genus().0 == 0)
                .unwrap()
                .len(),
            42
        );
        assert_eq!(enumerate_partitions(6, 13, |_| true).unwrap().len(), 203);
        assert_eq!(enumerate_partitions(0, 13, |_| true).unwrap().len(), 1);
        assert!(enumerate_partitions(14, 13, |_| true).is_err());
    }
}
