//! Permutations of `{1..n}`, their cycle structure and genus.
//!
//! Every public index is 1-based. Internally images are stored 0-based in a
//! `Vec<u32>`, which keeps the hot loops of the exhaustive searches cheap.
//!
//! The genus of a permutation `α` of `{1..n}` is the genus of the hypermap
//! `(ζ_n, α)` where `ζ_n = (1,2,…,n)`:
//!
//! ```text
//! n + 1 - 2 g(α) = z(α) + z(α⁻¹ ζ_n)
//! ```

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

/// Genus of a permutation or hypermap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Genus(pub u32);

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Number of cycles of a 0-based image array.
pub(crate) fn cycle_count(images: &[u32]) -> usize {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut z = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        z += 1;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = images[j] as usize;
        }
    }
    z
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    /// Builds a permutation from its 1-based image sequence `[α(1), …, α(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut raw = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::OutOfRange { element: v, n });
            }
            if seen[v - 1] {
                return Err(Error::DuplicateElement(v));
            }
            seen[v - 1] = true;
            raw.push((v - 1) as u32);
        }
        Ok(Permutation { images: raw })
    }

    /// Builds a permutation of `{1..n}` from a list of cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut raw: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &e in cycle {
                if e == 0 || e > n {
                    return Err(Error::OutOfRange { element: e, n });
                }
                if seen[e - 1] {
                    return Err(Error::DuplicateElement(e));
                }
                seen[e - 1] = true;
            }
            for (k, &e) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                raw[e - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images: raw })
    }

    /// Parses cycle notation such as `"(1,9)(2,8)(3,10,17)"`.
    ///
    /// Whitespace is ignored and elements missing from every cycle are fixed
    /// points. `""` and `"()"` both denote the identity.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Malformed(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Malformed("unclosed parenthesis".into()))?;
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(Error::Malformed("nested parenthesis".into()));
            }
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| Error::Malformed(format!("bad element {tok:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = &body[close + 1..];
        }
        Self::from_cycles(n, &cycles)
    }

    /// Parses the one-line image format `"a1 a2 … an"`.
    pub fn parse_one_line(text: &str) -> Result<Self> {
        let images = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad element {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(&images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `α(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// The 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Composition `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch(self.len(), other.len()));
        }
        Ok(Permutation {
            images: other
                .images
                .iter()
                .map(|&v| self.images[v as usize])
                .collect(),
        })
    }

    /// `α⁻¹ ζ_n`, the permutation whose cycles are the faces of `(ζ_n, α)`.
    pub fn dual(&self) -> Self {
        let n = self.len();
        let inv = self.inverse();
        Permutation {
            images: (0..n).map(|i| inv.images[(i + 1) % n]).collect(),
        }
    }

    /// Disjoint cycles, each rotated to start at its minimum, sorted by minimum.
    /// Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, counting fixed points.
    pub fn z(&self) -> usize {
        cycle_count(&self.images)
    }

    /// Multiset of cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn genus(&self) -> Genus {
        let n = self.len();
        if n == 0 {
            return Genus(0);
        }
        let z = self.z() + self.dual().z();
        assert!(
            z <= n + 1 && (n + 1 - z).is_multiple_of(2),
            "genus formula gave a non-integral or negative value for {self}"
        );
        Genus(((n + 1 - z) / 2) as u32)
    }

    /// True when every cycle read from its minimum is increasing.
    pub fn is_partition(&self) -> bool {
        // Exactly one descent per cycle (the wrap from maximum to minimum).
        let descents = self
            .images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| (v as usize) <= i)
            .count();
        descents == self.z()
    }

    /// Elements `i` with `α(i) < i` where `α(i)` is not the minimum of its cycle.
    pub fn back_points(&self) -> Vec<usize> {
        let mut cycle_min = vec![0usize; self.len()];
        for cycle in self.cycles() {
            let m = cycle[0];
            for &e in &cycle {
                cycle_min[e - 1] = m;
            }
        }
        (1..=self.len())
            .filter(|&i| {
                let a = self.apply(i);
                a < i && a != cycle_min[i - 1]
            })
            .collect()
    }

    /// `ζ_n^j α ζ_n^{-j}`: relabels every point `i` as `i + j` (mod n).
    pub fn conjugate_by_zeta(&self, j: i64) -> Self {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let shift = j.rem_euclid(n as i64) as usize;
        let mut images = vec![0u32; n];
        for (i, &v) in self.images.iter().enumerate() {
            images[(i + shift) % n] = ((v as usize + shift) % n) as u32;
        }
        Permutation { images }
    }

    /// Canonical cycle notation; fixed points are printed only when asked.
    pub fn to_cycle_string(&self, with_fixed_points: bool) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            if cycle.len() == 1 && !with_fixed_points {
                continue;
            }
            s.push('(');
            let parts: Vec<String> = cycle.iter().map(|e| e.to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    pub fn to_one_line(&self) -> String {
        let parts: Vec<String> = self.images().iter().map(|v| v.to_string()).collect();
        parts.join(" ")
    }
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&v| {
        let v = v as usize;
        v < seen.len() && !std::mem::replace(&mut seen[v], true)
    })
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string(false))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}]", self.to_cycle_string(false), self.len())
    }
}

/// The n-cycle `(1,2,…,n)`.
pub fn zeta(n: usize) -> Permutation {
    Permutation {
        images: (0..n).map(|i| ((i + 1) % n) as u32).collect(),
    }
}

/// Genus of the hypermap `(σ, α)`:
/// `n + 2 - 2g = z(σ) + z(α) + z(α⁻¹σ)`.
pub fn hypermap_genus(sigma: &Permutation, alpha: &Permutation) -> Result<Genus> {
    let n = sigma.len();
    if alpha.len() != n {
        return Err(Error::SizeMismatch(n, alpha.len()));
    }
    if n == 0 || !is_transitive(sigma, alpha) {
        return Err(Error::NotTransitive);
    }
    let z = sigma.z() + alpha.z() + alpha.inverse().compose(sigma)?.z();
    if z > n + 2 || !(n + 2 - z).is_multiple_of(2) {
        return Err(Error::Internal(format!(
            "hypermap genus formula is not a nonnegative integer (n={n}, z={z})"
        )));
    }
    Ok(Genus(((n + 2 - z) / 2) as u32))
}

fn is_transitive(sigma: &Permutation, alpha: &Permutation) -> bool {
    let n = sigma.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in [sigma, alpha] {
        for (i, &v) in p.images.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, v as usize));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|i| find(&mut parent, i) == root)
}

/// A permutation whose cycles are increasing when read from their minimum,
/// i.e. a set partition of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Permutation);

impl Partition {
    pub(crate) fn new_unchecked(p: Permutation) -> Self {
        debug_assert!(p.is_partition());
        Partition(p)
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        Self::try_from(Permutation::parse(text, n)?)
    }

    /// The partition whose blocks are the given sets.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let sorted: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.sort_unstable();
                b
            })
            .collect();
        Ok(Partition(Permutation::from_cycles(n, &sorted)?))
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }

    /// Blocks as increasing lists, sorted by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.0.cycles()
    }

    pub fn block_count(&self) -> usize {
        self.0.z()
    }

    pub fn conjugate_by_zeta(&self, j: i64) -> Self {
        Partition(self.0.conjugate_by_zeta(j))
    }
}

impl TryFrom<Permutation> for Partition {
    type Error = Error;

    fn try_from(p: Permutation) -> Result<Self> {
        if p.is_partition() {
            Ok(Partition(p))
        } else {
            Err(Error::NotPartition)
        }
    }
}

impl Deref for Partition {
    type Target = Permutation;

    fn deref(&self) -> &Permutation {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALPHA0: &str = "(1,9)(2,8)(3,10,17)(4,6,7)(5)(11,13,14,16)(12,15)";

    #[test]
    fn parse_examples() {
        let a0 = Permutation::parse(ALPHA0, 17).unwrap();
        assert_eq!(a0.apply(3), 10);
        assert_eq!(a0.apply(17), 3);
        assert_eq!(a0.apply(5), 5);
        assert_eq!(Permutation::parse("", 3).unwrap(), Permutation::identity(3));
        assert_eq!(
            Permutation::parse("(1,3)(2,4)", 4).unwrap().images(),
            vec![3, 4, 1, 2]
        );
        assert_eq!(
            Permutation::parse(" ( 1 , 3 ) (2,4) ", 4).unwrap().images(),
            vec![3, 4, 1, 2]
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Permutation::parse("(1,2)(2,3)", 3),
            Err(Error::DuplicateElement(2))
        );
        assert_eq!(
            Permutation::parse("(1,5)", 4),
            Err(Error::OutOfRange { element: 5, n: 4 })
        );
        assert!(matches!(
            Permutation::parse("(1,2", 4),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse("1,2)", 4),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse("((1,2))", 4),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse("(1,x)", 4),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn one_line_format() {
        let p = Permutation::parse_one_line("3 4 1 2").unwrap();
        assert_eq!(p.to_string(), "(1,3)(2,4)");
        assert_eq!(p.to_one_line(), "3 4 1 2");
        assert!(Permutation::parse_one_line("1 1").is_err());
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta(4).images(), vec![2, 3, 4, 1]);
        assert_eq!(zeta(1), Permutation::identity(1));
        assert_eq!(zeta(0).len(), 0);
        assert_eq!(zeta(17).z(), 1);
    }

    #[test]
    fn cycles_of_alpha0_and_its_dual() {
        let a0 = Permutation::parse(ALPHA0, 17).unwrap();
        assert_eq!(a0.z(), 7);
        let d = a0.dual();
        assert_eq!(
            d,
            Permutation::parse("(1,8)(2,17,9,3,7)(4,5)(6)(10,16)(11,15,14,12)(13)", 17).unwrap()
        );
        assert_eq!(d.z(), 7);
        assert_eq!(Permutation::identity(5).z(), 5);
        assert_eq!(
            d.to_cycle_string(true),
            "(1,8)(2,17,9,3,7)(4,5)(6)(10,16)(11,15,14,12)(13)"
        );
    }

    #[test]
    fn genus_examples() {
        let a0 = Permutation::parse(ALPHA0, 17).unwrap();
        assert_eq!(a0.genus(), Genus(2));
        assert_eq!(
            Permutation::parse("(1,2,3,4)", 4).unwrap().genus(),
            Genus(0)
        );
        assert_eq!(
            Permutation::parse("(1,3)(2,4)", 4).unwrap().genus(),
            Genus(1)
        );
        assert_eq!(Permutation::identity(0).genus(), Genus(0));
    }

    #[test]
    fn hypermap_genus_examples() {
        let n = 6;
        assert_eq!(
            hypermap_genus(&zeta(n), &Permutation::identity(n)),
            Ok(Genus(0))
        );
        let a0 = Permutation::parse(ALPHA0, 17).unwrap();
        assert_eq!(hypermap_genus(&zeta(17), &a0), Ok(Genus(2)));
        assert_eq!(
            hypermap_genus(
                &Permutation::identity(3),
                &Permutation::parse("(1,2)", 3).unwrap()
            ),
            Err(Error::NotTransitive)
        );
        assert_eq!(
            hypermap_genus(&zeta(3), &zeta(4)),
            Err(Error::SizeMismatch(3, 4))
        );
    }

    #[test]
    fn partition_predicate() {
        let a0 = Permutation::parse(ALPHA0, 17).unwrap();
        assert!(a0.is_partition());
        assert!(!Permutation::parse("(1,3,2)", 3).unwrap().is_partition());
        assert!(Permutation::identity(4).is_partition());
        assert!(Partition::try_from(Permutation::parse("(1,3,2)", 3).unwrap()).is_err());
        let p = Partition::from_blocks(5, &[vec![4, 1], vec![5, 2, 3]]).unwrap();
        assert_eq!(p.to_string(), "(1,4)(2,3,5)");
        assert_eq!(p.block_count(), 2);
    }

    #[test]
    fn back_point_examples() {
        let a0 = Permutation::parse(ALPHA0, 17).unwrap();
        assert!(a0.back_points().is_empty());
        assert_eq!(a0.dual().back_points().len(), 4);
        assert!(Permutation::identity(6).back_points().is_empty());
    }

    #[test]
    fn conjugation_examples() {
        let b1 = Permutation::parse("(1,3)(2,4)", 4).unwrap();
        assert_eq!(b1.conjugate_by_zeta(1), b1);
        let a0 = Permutation::parse(ALPHA0, 17).unwrap();
        let c = a0.conjugate_by_zeta(5);
        assert_eq!(c.genus(), Genus(2));
        assert!(c.is_partition());
        assert_eq!(a0.conjugate_by_zeta(17), a0);
        assert_eq!(a0.conjugate_by_zeta(-3).conjugate_by_zeta(3), a0);
        // ζ α ζ⁻¹ computed by composition
        let z = zeta(17);
        let direct = z.compose(&a0).unwrap().compose(&z.inverse()).unwrap();
        assert_eq!(a0.conjugate_by_zeta(1), direct);
    }

    #[test]
    fn printing_round_trip() {
        let a0 = Permutation::parse(ALPHA0, 17).unwrap();
        let s = a0.to_string();
        assert_eq!(s, "(1,9)(2,8)(3,10,17)(4,6,7)(11,13,14,16)(12,15)");
        assert_eq!(Permutation::parse(&s, 17).unwrap(), a0);
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(
            Permutation::parse("()", 3).unwrap(),
            Permutation::identity(3)
        );
    }
}
