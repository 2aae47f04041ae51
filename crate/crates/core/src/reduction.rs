//! Elementary reductions, the reduced form, and the bicolored matching view.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{hypermap_genus, Genus, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    FixedPoint,
    DualFixedPoint,
}

/// One elementary reduction; `label` is the element's label at the time of removal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub label: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies the recorded steps to `source`.
    pub fn replay(&self, source: &Permutation) -> Result<Permutation> {
        self.steps
            .iter()
            .try_fold(source.clone(), |a, step| match step.kind {
                ReductionKind::FixedPoint => remove_fixed_point(&a, step.label),
                ReductionKind::DualFixedPoint => remove_dual_fixed_point(&a, step.label),
            })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

/// Splices `i` (0-based) out of its cycle and shifts larger labels down.
pub(crate) fn splice_out(images: &[u32], i: usize) -> Vec<u32> {
    let i32_ = i as u32;
    let next = images[i];
    let mut out = Vec::with_capacity(images.len().saturating_sub(1));
    for (k, &v) in images.iter().enumerate() {
        if k == i {
            continue;
        }
        let v = if v == i32_ { next } else { v };
        out.push(if v > i32_ { v - 1 } else { v });
    }
    out
}

fn check_index(alpha: &Permutation, i: usize) -> Result<()> {
    if i == 0 || i > alpha.len() {
        Err(Error::OutOfRange {
            element: i,
            n: alpha.len(),
        })
    } else {
        Ok(())
    }
}

pub fn remove_fixed_point(alpha: &Permutation, i: usize) -> Result<Permutation> {
    check_index(alpha, i)?;
    if alpha.apply(i) != i {
        return Err(Error::NotFixedPoint(i));
    }
    let out = Permutation::from_raw(splice_out(alpha.raw(), i - 1));
    debug_assert_eq!(out.genus(), alpha.genus());
    Ok(out)
}

pub fn is_dual_fixed_point(alpha: &Permutation, i: usize) -> bool {
    let n = alpha.len();
    (1..=n).contains(&i) && alpha.apply(i) == i % n + 1
}

pub fn remove_dual_fixed_point(alpha: &Permutation, i: usize) -> Result<Permutation> {
    check_index(alpha, i)?;
    if !is_dual_fixed_point(alpha, i) {
        return Err(Error::NotDualFixedPoint(i));
    }
    let out = Permutation::from_raw(splice_out(alpha.raw(), i - 1));
    debug_assert_eq!(out.genus(), alpha.genus());
    Ok(out)
}

pub fn fixed_points(alpha: &Permutation) -> Vec<usize> {
    (1..=alpha.len()).filter(|&i| alpha.apply(i) == i).collect()
}

pub fn dual_fixed_points(alpha: &Permutation) -> Vec<usize> {
    (1..=alpha.len())
        .filter(|&i| is_dual_fixed_point(alpha, i))
        .collect()
}

pub fn is_reduced(alpha: &Permutation) -> bool {
    let n = alpha.len() as u32;
    alpha
        .raw()
        .iter()
        .enumerate()
        .all(|(i, &v)| v != i as u32 && v != (i as u32 + 1) % n)
}

fn next_step(alpha: &Permutation) -> Option<ReductionStep> {
    if let Some(&label) = fixed_points(alpha).first() {
        return Some(ReductionStep {
            kind: ReductionKind::FixedPoint,
            label,
        });
    }
    dual_fixed_points(alpha)
        .first()
        .map(|&label| ReductionStep {
            kind: ReductionKind::DualFixedPoint,
            label,
        })
}

/// The unique reduced form of `alpha`, removing the smallest fixed point
/// first and otherwise the smallest dual fixed point.
pub fn reduce(alpha: &Permutation) -> (Permutation, ReductionTrace) {
    let mut current = alpha.clone();
    let mut trace = ReductionTrace::default();
    while let Some(step) = next_step(&current) {
        current = Permutation::from_raw(splice_out(current.raw(), step.label - 1));
        trace.steps.push(step);
    }
    debug_assert!(current.is_empty() || current.genus() == alpha.genus());
    (current, trace)
}

/// Reduces by picking among the available reductions with `choose`, which
/// receives the candidate list and returns an index into it.
pub fn reduce_with(
    alpha: &Permutation,
    mut choose: impl FnMut(&[ReductionStep]) -> usize,
) -> (Permutation, ReductionTrace) {
    let mut current = alpha.clone();
    let mut trace = ReductionTrace::default();
    loop {
        let mut options: Vec<ReductionStep> = fixed_points(&current)
            .into_iter()
            .map(|label| ReductionStep {
                kind: ReductionKind::FixedPoint,
                label,
            })
            .collect();
        options.extend(
            dual_fixed_points(&current)
                .into_iter()
                .map(|label| ReductionStep {
                    kind: ReductionKind::DualFixedPoint,
                    label,
                }),
        );
        if options.is_empty() {
            return (current, trace);
        }
        let step = options[choose(&options) % options.len()];
        current = Permutation::from_raw(splice_out(current.raw(), step.label - 1));
        trace.steps.push(step);
    }
}

/// Original labels of the elements deleted by a complete reduction.
pub fn removable_elements(alpha: &Permutation) -> BTreeSet<usize> {
    let (_, trace) = reduce(alpha);
    let mut labels: Vec<usize> = (1..=alpha.len()).collect();
    trace
        .steps
        .iter()
        .map(|step| labels.remove(step.label - 1))
        .collect()
}

/// The bicolored matching `μ[α]` on the circular sequence
/// `(-1, 1, -2, 2, …, -n, n)`.
///
/// Points are stored by position: `-i` sits at `2(i-1)` and `i` at `2i-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BicoloredMatching {
    mate: Vec<u32>,
}

/// An edge `(i, -j)` joining positive `i` to negative `-j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatchingEdge {
    pub positive: usize,
    pub negative: usize,
}

impl fmt::Display for MatchingEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},-{})", self.positive, self.negative)
    }
}

fn pos_of_positive(i: usize) -> usize {
    2 * i - 1
}

fn pos_of_negative(i: usize) -> usize {
    2 * (i - 1)
}

/// Signed label of a position.
fn label_of(pos: usize) -> i64 {
    if pos.is_multiple_of(2) {
        -((pos / 2 + 1) as i64)
    } else {
        (pos / 2 + 1) as i64
    }
}

pub fn to_matching(alpha: &Permutation) -> BicoloredMatching {
    let n = alpha.len();
    let mut mate = vec![0u32; 2 * n];
    for i in 1..=n {
        let (p, q) = (pos_of_positive(i), pos_of_negative(alpha.apply(i)));
        mate[p] = q as u32;
        mate[q] = p as u32;
    }
    BicoloredMatching { mate }
}

impl BicoloredMatching {
    pub fn n(&self) -> usize {
        self.mate.len() / 2
    }

    /// Builds a matching from signed pairs `(i, -j)`.
    pub fn from_edges(n: usize, edges: &[MatchingEdge]) -> Result<Self> {
        let images: Vec<usize> = {
            let mut im = vec![0usize; n];
            for e in edges {
                if e.positive == 0 || e.positive > n {
                    return Err(Error::OutOfRange {
                        element: e.positive,
                        n,
                    });
                }
                if im[e.positive - 1] != 0 {
                    return Err(Error::DuplicateElement(e.positive));
                }
                im[e.positive - 1] = e.negative;
            }
            im
        };
        Ok(to_matching(&Permutation::from_images(&images)?))
    }

    /// The permutation `α` with `μ = μ[α]`.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.n();
        let images: Vec<u32> = (1..=n)
            .map(|i| (-label_of(self.mate[pos_of_positive(i)] as usize) - 1) as u32)
            .collect();
        Permutation::from_raw(images)
    }

    /// Partner of a signed point.
    pub fn partner(&self, point: i64) -> i64 {
        let pos = if point > 0 {
            pos_of_positive(point as usize)
        } else {
            pos_of_negative((-point) as usize)
        };
        label_of(self.mate[pos] as usize)
    }

    pub fn edges(&self) -> Vec<MatchingEdge> {
        (1..=self.n())
            .map(|i| MatchingEdge {
                positive: i,
                negative: (-self.partner(i as i64)) as usize,
            })
            .collect()
    }

    fn edge_positions(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len())
            .filter(|&p| p < self.mate[p] as usize)
            .map(|p| (p, self.mate[p] as usize))
            .collect()
    }

    /// Edges for which no other edge crosses and at least one of the two
    /// sublists cut off by the edge is noncrossing.
    pub fn removable_edges(&self) -> BTreeSet<MatchingEdge> {
        let edges = self.edge_positions();
        let inside = |(a, b): (usize, usize), p: usize| a < p && p < b;
        let crosses = |e: (usize, usize), f: (usize, usize)| inside(e, f.0) != inside(e, f.1);
        let noncrossing = |set: &[(usize, usize)]| {
            set.iter()
                .enumerate()
                .all(|(k, &e)| set[k + 1..].iter().all(|&f| !crosses(e, f)))
        };
        edges
            .iter()
            .filter(|&&e| {
                let others = edges.iter().filter(|&&f| f != e);
                if others.clone().any(|&f| crosses(e, f)) {
                    return false;
                }
                let (within, outside): (Vec<_>, Vec<_>) = others.partition(|&&f| inside(e, f.0));
                noncrossing(&within) || noncrossing(&outside)
            })
            .map(|&(a, b)| {
                let (p, q) = if a % 2 == 1 { (a, b) } else { (b, a) };
                MatchingEdge {
                    positive: label_of(p) as usize,
                    negative: (-label_of(q)) as usize,
                }
            })
            .collect()
    }

    /// True when no two cyclically consecutive points are matched.
    pub fn is_reduced(&self) -> bool {
        let m = self.mate.len();
        (0..m).all(|p| self.mate[p] as usize != (p + 1) % m)
    }

    /// Genus of the map `(ζ̃_{2n}, μ)` with `ζ̃_{2n} = (-1,1,-2,2,…,-n,n)`.
    pub fn genus(&self) -> Result<Genus> {
        let m = self.mate.len();
        if m == 0 {
            return Ok(Genus(0));
        }
        let zt = crate::perm::zeta(m);
        let mu = Permutation::from_raw(self.mate.clone());
        hypermap_genus(&zt, &mu)
    }

    /// Removes the matched consecutive pair starting at position `p`,
    /// rotating so that the sequence again starts with a negative point.
    fn remove_adjacent(&self, p: usize) -> BicoloredMatching {
        let m = self.mate.len();
        let q = (p + 1) % m;
        let order: Vec<usize> = (0..m).filter(|&r| r != p && r != q).collect();
        let mut order = order;
        if order.first().is_some_and(|&r| r % 2 == 1) {
            order.rotate_right(1);
        }
        let mut new_pos = vec![usize::MAX; m];
        for (k, &r) in order.iter().enumerate() {
            new_pos[r] = k;
        }
        let mate = order
            .iter()
            .map(|&r| new_pos[self.mate[r] as usize] as u32)
            .collect();
        BicoloredMatching { mate }
    }

    /// Removes matched consecutive pairs until none remain.
    pub fn reduce(&self) -> BicoloredMatching {
        let mut current = self.clone();
        loop {
            let m = current.mate.len();
            match (0..m).find(|&p| current.mate[p] as usize == (p + 1) % m) {
                Some(p) => current = current.remove_adjacent(p),
                None => return current,
            }
        }
    }
}

impl fmt::Display for BicoloredMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alpha = self.to_permutation();
        if alpha.is_empty() {
            return f.write_str("()");
        }
        for cycle in alpha.cycles() {
            for i in cycle {
                write!(f, "({},-{})", i, alpha.apply(i))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BicoloredMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALPHA0: &str = "(1,9)(2,8)(3,10,17)(4,6,7)(5)(11,13,14,16)(12,15)";
    const ALPHA1: &str = "(1,5)(2,4)(3,6,12)(7,9,11)(8,10)";

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn remove_fixed_point_examples() {
        let a0 = p(ALPHA0, 17);
        assert_eq!(
            remove_fixed_point(&a0, 5).unwrap(),
            p("(1,8)(2,7)(3,9,16)(4,5,6)(10,12,13,15)(11,14)", 16)
        );
        assert!(remove_fixed_point(&Permutation::identity(1), 1)
            .unwrap()
            .is_empty());
        assert_eq!(
            remove_fixed_point(&p("(2,3)", 3), 1).unwrap(),
            p("(1,2)", 2)
        );
        assert_eq!(remove_fixed_point(&a0, 6), Err(Error::NotFixedPoint(6)));
    }

    #[test]
    fn remove_dual_fixed_point_examples() {
        let a0 = p(ALPHA0, 17);
        let r = remove_dual_fixed_point(&a0, 6).unwrap();
        assert_eq!(r.len(), 16);
        assert_eq!(r.genus(), Genus(2));
        assert!(r.is_partition());
        assert!(r.cycles().contains(&vec![4, 6]));
        let two = p("(1,2)", 2);
        let one = remove_dual_fixed_point(&two, 1).unwrap();
        assert_eq!(one, Permutation::identity(1));
        assert!(reduce(&two).0.is_empty());
        assert_eq!(
            remove_dual_fixed_point(&crate::perm::zeta(5), 1).unwrap(),
            crate::perm::zeta(4)
        );
        // wrap-around: α(n) = 1
        assert_eq!(
            remove_dual_fixed_point(&p("(1,3)(2,4)", 4), 4),
            Err(Error::NotDualFixedPoint(4))
        );
        assert_eq!(
            remove_dual_fixed_point(&p("(1,3,5)(2,4)", 5), 5).unwrap(),
            p("(1,3)(2,4)", 4)
        );
    }

    #[test]
    fn reduced_predicate() {
        assert!(is_reduced(&p("(1,3)(2,4)", 4)));
        assert!(!is_reduced(&p(ALPHA0, 17)));
        assert!(!is_reduced(&Permutation::identity(1)));
        assert!(is_reduced(&Permutation::identity(0)));
    }

    #[test]
    fn reduce_examples() {
        let a0 = p(ALPHA0, 17);
        let (a1, trace) = reduce(&a0);
        assert_eq!(a1, p(ALPHA1, 12));
        assert_eq!(a1.genus(), Genus(2));
        assert_eq!(trace.replay(&a0).unwrap(), a1);
        assert_eq!(trace.len(), 5);
        assert!(reduce(&p("(1,2,3,4)", 4)).0.is_empty());
        assert!(reduce(&p("(1,4)(2,3)(5,6)", 6)).0.is_empty());
        let b2 = p("(1,4)(2,5)(3,6)", 6);
        assert_eq!(reduce(&b2).0, b2);
    }

    #[test]
    fn trace_json() {
        let (_, trace) = reduce(&p("(1,2)", 2));
        assert_eq!(
            trace.to_json(),
            r#"[{"kind":"dual-fixed-point","label":1},{"kind":"fixed-point","label":1}]"#
        );
        let back: ReductionTrace = serde_json::from_str(&trace.to_json()).unwrap();
        assert_eq!(back, trace);
    }

    #[test]
    fn removable_element_examples() {
        let a0 = p(ALPHA0, 17);
        let rem = removable_elements(&a0);
        assert_eq!(rem.len(), 17 - 12);
        assert!(removable_elements(&p("(1,3)(2,4)", 4)).is_empty());
        assert_eq!(removable_elements(&p("(1,2,5)(3,4)", 5)), (1..=5).collect());
    }

    #[test]
    fn matching_example() {
        let a = p("(1,5,3,4,8)(2,7)(6)", 8);
        let mu = to_matching(&a);
        assert_eq!(
            mu.to_string(),
            "(1,-5)(5,-3)(3,-4)(4,-8)(8,-1)(2,-7)(7,-2)(6,-6)"
        );
        assert_eq!(mu.to_permutation(), a);
        assert_eq!(
            to_matching(&Permutation::identity(2)).to_string(),
            "(1,-1)(2,-2)"
        );
        assert_eq!(
            to_matching(&p("(1,3)(2,4)", 4)).to_string(),
            "(1,-3)(3,-1)(2,-4)(4,-2)"
        );
        assert_eq!(mu.partner(1), -5);
        assert_eq!(mu.partner(-5), 1);
    }

    #[test]
    fn matching_genus_agrees() {
        let a0 = p(ALPHA0, 17);
        assert_eq!(to_matching(&a0).genus(), Ok(Genus(2)));
        let b1 = p("(1,3)(2,4)", 4);
        assert_eq!(to_matching(&b1).genus(), Ok(Genus(1)));
    }

    #[test]
    fn removable_edges_examples() {
        let nc = to_matching(&p("(1,2,5)(3,4)", 5));
        assert_eq!(nc.removable_edges().len(), 5);
        assert!(to_matching(&p("(1,3)(2,4)", 4))
            .removable_edges()
            .is_empty());
        let a0 = p(ALPHA0, 17);
        let edges = to_matching(&a0).removable_edges();
        let from_elements: BTreeSet<usize> = edges.iter().map(|e| e.positive).collect();
        assert_eq!(from_elements, removable_elements(&a0));
        assert!(edges.iter().all(|e| a0.apply(e.positive) == e.negative));
    }

    #[test]
    fn matching_reduce_commutes() {
        let a0 = p(ALPHA0, 17);
        let mu = to_matching(&a0);
        assert!(!mu.is_reduced());
        let r = mu.reduce();
        assert!(r.is_reduced());
        assert_eq!(r.to_permutation(), reduce(&a0).0);
        assert!(to_matching(&p("(1,3)(2,4)", 4)).is_reduced());
        assert!(!to_matching(&Permutation::identity(1)).is_reduced());
    }
}
