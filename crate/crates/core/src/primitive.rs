//! Parallel edges, their removal, primitive and semiprimitive forms, and
//! parallel classes with point types.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::reduction::{is_reduced, remove_dual_fixed_point};

/// A pair of parallel edges `i → j+1`, `j → i+1`; stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParallelPair {
    pub i: usize,
    pub j: usize,
}

impl ParallelPair {
    pub fn new(i: usize, j: usize) -> Self {
        ParallelPair {
            i: i.min(j),
            j: i.max(j),
        }
    }
}

impl fmt::Display for ParallelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

fn require_reduced(alpha: &Permutation) -> Result<()> {
    if is_reduced(alpha) {
        Ok(())
    } else {
        Err(Error::NotReduced)
    }
}

/// The 2-cycles of `α⁻¹ζ_n`, without the reducedness check.
pub(crate) fn dual_two_cycles(alpha: &Permutation) -> Vec<ParallelPair> {
    let d = alpha.dual();
    (1..=alpha.len())
        .filter_map(|i| {
            let j = d.apply(i);
            (j > i && d.apply(j) == i).then_some(ParallelPair { i, j })
        })
        .collect()
}

pub fn parallel_pairs(alpha: &Partition) -> Result<Vec<ParallelPair>> {
    require_reduced(alpha)?;
    Ok(dual_two_cycles(alpha))
}

fn in_two_cycle(alpha: &Permutation, i: usize) -> bool {
    let a = alpha.apply(i);
    a != i && alpha.apply(a) == i
}

/// A pair whose removal is allowed when projecting to the semiprimitive form.
fn touches_two_cycle(alpha: &Permutation, pair: ParallelPair) -> bool {
    in_two_cycle(alpha, pair.i) || in_two_cycle(alpha, pair.j)
}

fn is_pair_of(alpha: &Permutation, pair: ParallelPair) -> bool {
    let n = alpha.len();
    let (i, j) = (pair.i, pair.j);
    (1..=n).contains(&i)
        && (1..=n).contains(&j)
        && i != j
        && alpha.apply(i) == j % n + 1
        && alpha.apply(j) == i % n + 1
}

/// Swaps the images of `i` and `j` (merging their cycles) and removes the two
/// dual fixed points created, the larger label first.
pub fn merge_parallel(alpha: &Partition, pair: ParallelPair) -> Result<Partition> {
    require_reduced(alpha)?;
    merge_unchecked(alpha, pair)
}

fn merge_unchecked(alpha: &Permutation, pair: ParallelPair) -> Result<Partition> {
    if !is_pair_of(alpha, pair) {
        return Err(Error::InvalidParallelPair(pair.i, pair.j));
    }
    let mut images = alpha.images();
    images.swap(pair.i - 1, pair.j - 1);
    let gamma = Permutation::from_images(&images)?;
    let internal = |e: Error| Error::Internal(format!("merge of {pair}: {e}"));
    let once = remove_dual_fixed_point(&gamma, pair.j).map_err(internal)?;
    let twice = remove_dual_fixed_point(&once, pair.i).map_err(internal)?;
    debug_assert_eq!(twice.genus(), alpha.genus());
    Partition::try_from(twice)
}

fn project(
    alpha: &Partition,
    allowed: impl Fn(&Permutation, ParallelPair) -> bool,
    mut choose: impl FnMut(&[ParallelPair]) -> usize,
) -> Result<Partition> {
    require_reduced(alpha)?;
    let mut current = alpha.clone();
    loop {
        let candidates: Vec<ParallelPair> = dual_two_cycles(&current)
            .into_iter()
            .filter(|&p| allowed(&current, p))
            .collect();
        if candidates.is_empty() {
            return Ok(current);
        }
        let pick = candidates[choose(&candidates) % candidates.len()];
        current = merge_unchecked(&current, pick)?;
    }
}

/// Removes parallel pairs until none remain.
pub fn primitive_form(alpha: &Partition) -> Result<Partition> {
    project(alpha, |_, _| true, |_| 0)
}

/// As [`primitive_form`], with `choose` selecting which pair to remove next.
pub fn primitive_form_with(
    alpha: &Partition,
    choose: impl FnMut(&[ParallelPair]) -> usize,
) -> Result<Partition> {
    project(alpha, |_, _| true, choose)
}

/// Removes parallel pairs having an edge in a 2-cycle until none remain.
pub fn semiprimitive_form(alpha: &Partition) -> Result<Partition> {
    project(alpha, touches_two_cycle, |_| 0)
}

pub fn semiprimitive_form_with(
    alpha: &Partition,
    choose: impl FnMut(&[ParallelPair]) -> usize,
) -> Result<Partition> {
    project(alpha, touches_two_cycle, choose)
}

pub fn is_primitive(alpha: &Partition) -> Result<bool> {
    Ok(parallel_pairs(alpha)?.is_empty())
}

pub fn is_semiprimitive(alpha: &Partition) -> Result<bool> {
    Ok(!parallel_pairs(alpha)?
        .into_iter()
        .any(|p| touches_two_cycle(alpha, p)))
}

/// How the representative edge of a two-edge class is chosen.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum RepresentativeRule {
    /// The edge with the smallest source label.
    #[default]
    SmallestSource,
    /// Listed directed edges win when present in their class; otherwise the
    /// smallest source.
    Prefer(Vec<(usize, usize)>),
}

/// Directed edges `(i, α(i))`.
pub type Edge = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointTypes {
    pub representatives: Vec<Edge>,
    /// `types[i-1]` is the type of point `i`.
    pub types: Vec<u8>,
    pub m0: usize,
    pub m1: usize,
    pub m2: usize,
}

impl PointTypes {
    pub fn points_of_type(&self, t: u8) -> Vec<usize> {
        (1..=self.types.len())
            .filter(|&i| self.types[i - 1] == t)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelClassDecomposition {
    /// Each class lists its directed edges in increasing order.
    pub classes: Vec<Vec<Edge>>,
    /// Present when the partition is semiprimitive.
    pub point_types: Option<PointTypes>,
}

impl ParallelClassDecomposition {
    /// Number of parallel classes.
    pub fn p(&self) -> usize {
        self.classes.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serializes")
    }
}

/// Maximal cyclic runs of consecutive labels in `points` (a subset of `1..=n`).
pub fn cyclic_arcs(points: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut present = vec![false; n + 1];
    for &p in points {
        present[p] = true;
    }
    if points.len() == n {
        return vec![(1..=n).collect()];
    }
    let mut arcs = Vec::new();
    for start in 1..=n {
        let prev = if start == 1 { n } else { start - 1 };
        if !present[start] || present[prev] {
            continue;
        }
        let mut arc = vec![start];
        let mut k = start % n + 1;
        while present[k] {
            arc.push(k);
            k = k % n + 1;
        }
        arcs.push(arc);
    }
    arcs
}

/// Endpoint labels of a class.
pub fn class_endpoints(class: &[Edge]) -> Vec<usize> {
    let mut pts: Vec<usize> = class.iter().flat_map(|&(a, b)| [a, b]).collect();
    pts.sort_unstable();
    pts.dedup();
    pts
}

pub fn parallel_classes(
    alpha: &Partition,
    rule: &RepresentativeRule,
) -> Result<ParallelClassDecomposition> {
    require_reduced(alpha)?;
    let n = alpha.len();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    };
    // Edges are indexed by their source.
    for i in 1..=n {
        if in_two_cycle(alpha, i) {
            union(i, alpha.apply(i));
        }
    }
    let pairs = dual_two_cycles(alpha);
    for pair in &pairs {
        union(pair.i, pair.j);
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Edge>> = Default::default();
    for i in 1..=n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push((i, alpha.apply(i)));
    }
    let mut classes: Vec<Vec<Edge>> = groups.into_values().collect();
    classes.sort();

    let semiprimitive = !pairs.iter().any(|&p| touches_two_cycle(alpha, p));
    let point_types = semiprimitive
        .then(|| assign_types(alpha, &classes, rule))
        .transpose()?;
    Ok(ParallelClassDecomposition {
        classes,
        point_types,
    })
}

fn assign_types(
    alpha: &Permutation,
    classes: &[Vec<Edge>],
    rule: &RepresentativeRule,
) -> Result<PointTypes> {
    let n = alpha.len();
    let mut types = vec![0u8; n];
    let mut representatives = Vec::with_capacity(classes.len());
    for class in classes {
        let rep = match class.as_slice() {
            [e] => *e,
            [(a, b), (c, d)] if (a, b) == (d, c) => (*a, *b),
            [e, f] => match rule {
                RepresentativeRule::Prefer(list) if list.contains(f) && !list.contains(e) => *f,
                _ => *e,
            },
            _ => {
                return Err(Error::Internal(format!(
                    "parallel class with {} edges in a semiprimitive partition",
                    class.len()
                )))
            }
        };
        types[rep.0 - 1] += 1;
        types[rep.1 - 1] += 1;
        representatives.push(rep);
    }
    let count = |t: u8| types.iter().filter(|&&x| x == t).count();
    let (m0, m1, m2) = (count(0), count(1), count(2));
    if m0 + m1 + m2 != n {
        return Err(Error::Internal("point type outside 0..=2".into()));
    }
    Ok(PointTypes {
        representatives,
        types,
        m0,
        m1,
        m2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALPHA1: &str = "(1,5)(2,4)(3,6,12)(7,9,11)(8,10)";
    const ALPHA2: &str = "(1,3)(2,4,10)(5,7,9)(6,8)";
    const ALPHA3: &str = "(1,3)(2,4,6,8)(5,7)";
    const FIG5: &str = "(1,5)(2,4)(3,8,11,16)(6,18)(7,17)(9,14)(10,13)(12,15)";

    fn part(s: &str, n: usize) -> Partition {
        Partition::parse(s, n).unwrap()
    }

    #[test]
    fn parallel_pair_examples() {
        assert!(parallel_pairs(&part("(1,3)(2,4)", 4)).unwrap().is_empty());
        assert_eq!(
            parallel_pairs(&part("(1,4)(2,6)(3,5)", 6)).unwrap(),
            vec![ParallelPair::new(2, 5)]
        );
        let a2 = part(ALPHA2, 10);
        assert_eq!(parallel_pairs(&a2).unwrap(), vec![ParallelPair::new(4, 9)]);
        assert_eq!(
            parallel_pairs(&part(ALPHA1, 12)).unwrap(),
            vec![ParallelPair::new(1, 4), ParallelPair::new(6, 11)]
        );
        assert_eq!(
            parallel_pairs(&part("(1,2)(3,4)", 4)),
            Err(Error::NotReduced)
        );
    }

    #[test]
    fn merge_examples() {
        let b1 = part("(1,3)(2,4)", 4);
        let m = merge_parallel(&part("(1,4)(2,6)(3,5)", 6), ParallelPair::new(2, 5)).unwrap();
        assert_eq!(m, b1);
        assert_eq!(m.genus().0, 1);
        let a1 = part(ALPHA1, 12);
        assert_eq!(
            merge_parallel(&a1, ParallelPair::new(1, 4)).unwrap(),
            part(ALPHA2, 10)
        );
        assert_eq!(
            merge_parallel(&part(ALPHA2, 10), ParallelPair::new(4, 9)).unwrap(),
            part(ALPHA3, 8)
        );
        assert_eq!(
            merge_parallel(&a1, ParallelPair::new(1, 5)),
            Err(Error::InvalidParallelPair(1, 5))
        );
    }

    #[test]
    fn projections() {
        let a1 = part(ALPHA1, 12);
        let a2 = part(ALPHA2, 10);
        let a3 = part(ALPHA3, 8);
        let b1 = part("(1,3)(2,4)", 4);
        let b2 = part("(1,4)(2,5)(3,6)", 6);
        assert_eq!(primitive_form(&part("(1,4)(2,6)(3,5)", 6)).unwrap(), b1);
        assert_eq!(primitive_form(&b2).unwrap(), b2);
        assert_eq!(primitive_form(&a1).unwrap(), a3);
        assert_eq!(semiprimitive_form(&a1).unwrap(), a2);
        assert_eq!(semiprimitive_form(&a2).unwrap(), a2);
        assert_eq!(semiprimitive_form(&b1).unwrap(), b1);
        assert_eq!(primitive_form(&part(FIG5, 18)).unwrap(), a3);
        for k in 0..4 {
            assert_eq!(primitive_form_with(&a1, |c| k % c.len()).unwrap(), a3);
        }
    }

    #[test]
    fn predicates() {
        let a2 = part(ALPHA2, 10);
        let a3 = part(ALPHA3, 8);
        let x = part("(1,4)(2,6)(3,5)", 6);
        assert!(is_primitive(&a3).unwrap() && is_semiprimitive(&a3).unwrap());
        assert!(!is_primitive(&a2).unwrap() && is_semiprimitive(&a2).unwrap());
        assert!(!is_primitive(&x).unwrap() && !is_semiprimitive(&x).unwrap());
    }

    #[test]
    fn alpha2_types() {
        let a2 = part(ALPHA2, 10);
        let d = parallel_classes(&a2, &RepresentativeRule::Prefer(vec![(9, 5)])).unwrap();
        let t = d.point_types.as_ref().unwrap();
        assert_eq!(t.points_of_type(1), vec![1, 3, 4, 6, 8, 10]);
        assert_eq!(t.points_of_type(2), vec![2, 5, 7, 9]);
        assert_eq!(t.m0, 0);
        let default = parallel_classes(&a2, &RepresentativeRule::SmallestSource).unwrap();
        let td = default.point_types.unwrap();
        assert_eq!((td.m0, td.m1, td.m2), (0, 6, 4));
        assert_eq!(d.p(), 7);
    }

    #[test]
    fn beta1_types() {
        let d = parallel_classes(&part("(1,3)(2,4)", 4), &RepresentativeRule::default()).unwrap();
        assert_eq!(d.p(), 2);
        let t = d.point_types.unwrap();
        assert_eq!((t.m0, t.m1, t.m2), (0, 4, 0));
    }

    #[test]
    fn fig5_classes() {
        let f5 = part(FIG5, 18);
        let d = parallel_classes(&f5, &RepresentativeRule::default()).unwrap();
        assert!(d.point_types.is_none());
        let big: Vec<Edge> = vec![
            (1, 5),
            (2, 4),
            (4, 2),
            (5, 1),
            (6, 18),
            (7, 17),
            (17, 7),
            (18, 6),
        ];
        assert!(d.classes.contains(&big));
        assert!(d
            .classes
            .contains(&vec![(9, 14), (10, 13), (13, 10), (14, 9)]));
        for class in &d.classes {
            let arcs = cyclic_arcs(&class_endpoints(class), 18);
            assert_eq!(arcs.len(), 2, "{class:?}");
        }
        assert!(d.to_json().contains("\"classes\""));
    }

    #[test]
    fn arcs() {
        assert_eq!(cyclic_arcs(&[1, 2, 9, 10], 10), vec![vec![9, 10, 1, 2]]);
        assert_eq!(cyclic_arcs(&[2, 3, 6], 10), vec![vec![2, 3], vec![6]]);
        assert_eq!(cyclic_arcs(&[1, 2, 3], 3), vec![vec![1, 2, 3]]);
    }
}
