use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::search::{dual_cycle_stats, genus_of, search, Constraints, MAX_SEARCH_N};
use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::primitive::{is_semiprimitive, parallel_classes, RepresentativeRule};
use crate::reduction::is_reduced;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryKind {
    Primitive,
    SemiprimitiveOnly,
}

/// One cyclic-relabeling class of semiprimitive partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEntry", into = "RawEntry")]
pub struct CatalogueEntry {
    pub representative: Partition,
    pub m: usize,
    pub c: usize,
    pub p: usize,
    pub m0: usize,
    pub m1: usize,
    pub m2: usize,
    pub orbit_size: usize,
    pub kind: EntryKind,
    pub cycle_type: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawEntry {
    representative: String,
    m: usize,
    c: usize,
    p: usize,
    m0: usize,
    m1: usize,
    m2: usize,
    orbit_size: usize,
    kind: EntryKind,
    cycle_type: Vec<usize>,
}

impl From<CatalogueEntry> for RawEntry {
    fn from(e: CatalogueEntry) -> Self {
        RawEntry {
            representative: e.representative.to_string(),
            m: e.m,
            c: e.c,
            p: e.p,
            m0: e.m0,
            m1: e.m1,
            m2: e.m2,
            orbit_size: e.orbit_size,
            kind: e.kind,
            cycle_type: e.cycle_type,
        }
    }
}

impl TryFrom<RawEntry> for CatalogueEntry {
    type Error = Error;

    fn try_from(r: RawEntry) -> Result<Self> {
        let representative = Partition::parse(&r.representative, r.m)?;
        let entry = CatalogueEntry {
            representative,
            m: r.m,
            c: r.c,
            p: r.p,
            m0: r.m0,
            m1: r.m1,
            m2: r.m2,
            orbit_size: r.orbit_size,
            kind: r.kind,
            cycle_type: r.cycle_type,
        };
        entry.validate()?;
        Ok(entry)
    }
}

impl CatalogueEntry {
    /// Builds the entry for the orbit of a semiprimitive partition.
    pub fn from_partition(alpha: &Partition) -> Result<Self> {
        let orbit = orbit_of(alpha);
        let representative = orbit[0].clone();
        let decomposition = parallel_classes(&representative, &RepresentativeRule::default())?;
        let types = decomposition.point_types.as_ref().ok_or_else(|| {
            Error::InconsistentEntry(format!("{representative} is not semiprimitive"))
        })?;
        let kind = if crate::primitive::is_primitive(&representative)? {
            EntryKind::Primitive
        } else {
            EntryKind::SemiprimitiveOnly
        };
        Ok(CatalogueEntry {
            m: representative.len(),
            c: representative.block_count(),
            p: decomposition.p(),
            m0: types.m0,
            m1: types.m1,
            m2: types.m2,
            orbit_size: orbit.len(),
            kind,
            cycle_type: representative.cycle_type(),
            representative,
        })
    }

    /// Checks the stored counts against each other and against the representative.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InconsistentEntry(msg));
        if self.m0 + self.m1 + self.m2 != self.m {
            return bad(format!(
                "m0+m1+m2 = {} but m = {}",
                self.m0 + self.m1 + self.m2,
                self.m
            ));
        }
        if self.orbit_size == 0 || !self.m.is_multiple_of(self.orbit_size) {
            return bad(format!(
                "orbit size {} does not divide m = {}",
                self.orbit_size, self.m
            ));
        }
        if self.representative.len() != self.m {
            return bad(format!("representative is not on {} points", self.m));
        }
        if self.representative.block_count() != self.c {
            return bad(format!("representative does not have {} cycles", self.c));
        }
        if self.representative.cycle_type() != self.cycle_type {
            return bad("cycle type does not match the representative".into());
        }
        if self.p == 0 {
            return bad("no parallel classes".into());
        }
        Ok(())
    }

    pub fn genus(&self) -> u32 {
        self.representative.genus().0
    }
}

impl fmt::Display for CatalogueEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} m={} c={} p={} types=({},{},{}) orbit={}",
            self.representative, self.m, self.c, self.p, self.m0, self.m1, self.m2, self.orbit_size
        )
    }
}

/// Distinct cyclic conjugates, least image sequence first.
fn orbit_of(alpha: &Partition) -> Vec<Partition> {
    let n = alpha.len().max(1);
    let set: BTreeSet<Vec<usize>> = (0..n as i64)
        .map(|j| alpha.conjugate_by_zeta(j).images())
        .collect();
    set.into_iter()
        .map(|im| {
            Partition::try_from(Permutation::from_images(&im).expect("conjugate is a bijection"))
                .expect("conjugate is a partition")
        })
        .collect()
}

/// The lexicographically least image sequence among the cyclic conjugates.
pub fn canonical_representative(alpha: &Partition) -> Partition {
    orbit_of(alpha).swap_remove(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub representative: Partition,
    pub size: usize,
}

/// Groups partitions into orbits under conjugation by `ζ_n`.
pub fn cyclic_orbits(partitions: &[Partition]) -> Result<Vec<Orbit>> {
    if let Some(first) = partitions.first() {
        if partitions.iter().any(|p| p.len() != first.len()) {
            return Err(Error::MixedSizes);
        }
    }
    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for p in partitions {
        let orbit = orbit_of(p);
        seen.entry(orbit[0].images()).or_insert(orbit.len());
    }
    Ok(seen
        .into_iter()
        .map(|(im, size)| Orbit {
            representative: Partition::try_from(
                Permutation::from_images(&im).expect("valid images"),
            )
            .expect("partition"),
            size,
        })
        .collect())
}

/// Options for the bounded primitive search.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Largest genus searched without `allow_large_genus`.
    pub genus_limit: u32,
    pub allow_large_genus: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            genus_limit: 2,
            allow_large_genus: false,
        }
    }
}

/// Largest possible size of a primitive partition of genus `g`.
pub fn primitive_size_bound(g: u32) -> usize {
    if g == 0 {
        0
    } else {
        6 * (2 * g as usize - 1)
    }
}

/// All primitive partitions of genus `g` on exactly `n` points.
pub fn primitive_partitions_of_size(n: usize, g: u32) -> Vec<Partition> {
    if n == 0 || n > MAX_SEARCH_N || (n as i64 + 1 - 2 * g as i64) < 2 {
        return Vec::new();
    }
    // z(α⁻¹ζ) ≤ n/3 because the dual has no cycles of length 1 or 2.
    let zsum = n + 1 - 2 * g as usize;
    let min_blocks = zsum.saturating_sub(n / 3);
    let constraints = Constraints {
        n,
        min_block: 2,
        no_dual_fixed_points: true,
        min_blocks,
        max_blocks: zsum - 1,
    };
    let mut found: Vec<Vec<u32>> = search(
        &constraints,
        Vec::new,
        |acc: &mut Vec<Vec<u32>>, leaf| {
            let (dual, shortest) = dual_cycle_stats(leaf.images);
            if shortest >= 3 && genus_of(n, leaf.blocks, dual) == g {
                acc.push(leaf.to_images());
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    found.sort();
    found
        .into_iter()
        .map(|im| Partition::new_unchecked(Permutation::from_raw(im)))
        .collect()
}

fn check_genus(g: u32, opts: &SearchOptions) -> Result<()> {
    if g > opts.genus_limit && !opts.allow_large_genus {
        return Err(Error::GenusLimit {
            genus: g,
            limit: opts.genus_limit,
        });
    }
    if primitive_size_bound(g) > MAX_SEARCH_N {
        return Err(Error::LimitExceeded {
            n: primitive_size_bound(g),
            limit: MAX_SEARCH_N,
        });
    }
    Ok(())
}

fn sort_entries(entries: &mut [CatalogueEntry]) {
    entries.sort_by(|a, b| {
        (a.m, &a.cycle_type, a.representative.images()).cmp(&(
            b.m,
            &b.cycle_type,
            b.representative.images(),
        ))
    });
}

/// The complete catalogue of primitive partitions of genus `g`, one entry per
/// cyclic orbit.
pub fn enumerate_primitive(g: u32, opts: &SearchOptions) -> Result<Vec<CatalogueEntry>> {
    check_genus(g, opts)?;
    let mut entries = Vec::new();
    for n in 1..=primitive_size_bound(g) {
        let all = primitive_partitions_of_size(n, g);
        for orbit in cyclic_orbits(&all)? {
            entries.push(CatalogueEntry::from_partition(&orbit.representative)?);
        }
    }
    sort_entries(&mut entries);
    Ok(entries)
}

/// Inverse of a parallel-pair merge: inserts two new labels and splits one
/// cycle of `beta` into two. Returns every partition obtained this way.
pub fn cycle_splits(beta: &Partition) -> Vec<Partition> {
    let m = beta.len();
    let size = m + 2;
    let cycle_of: Vec<usize> = {
        let mut v = vec![0; m + 1];
        for (c, cycle) in beta.cycles().iter().enumerate() {
            for &e in cycle {
                v[e] = c;
            }
        }
        v
    };
    let mut out = Vec::new();
    // New labels a < b in 1..=m+2; the old elements keep their order.
    for a in 1..size {
        for b in a + 1..=size {
            let old_label = |x: usize| -> usize {
                // new label x (not a, not b) back to its old label
                x - (x > a) as usize - (x > b) as usize
            };
            let a_next = a % size + 1;
            let b_next = b % size + 1;
            if a_next == b || b_next == a || a_next == b_next {
                continue;
            }
            let (oa, ob) = (old_label(a_next), old_label(b_next));
            if cycle_of[oa] != cycle_of[ob] {
                continue;
            }
            let new_label = |o: usize| -> usize {
                let mut x = o;
                if x >= a {
                    x += 1;
                }
                if x >= b {
                    x += 1;
                }
                x
            };
            let mut images = vec![0usize; size];
            for o in 1..=m {
                let target = beta.apply(o);
                let t = new_label(target);
                images[new_label(o) - 1] = if t == a_next {
                    a
                } else if t == b_next {
                    b
                } else {
                    t
                };
            }
            // γ(a) = a+1, γ(b) = b+1, then swap the images of a and b.
            images[a - 1] = b_next;
            images[b - 1] = a_next;
            if let Ok(p) = Permutation::from_images(&images) {
                if let Ok(part) = Partition::try_from(p) {
                    out.push(part);
                }
            }
        }
    }
    out
}

fn is_semiprimitive_of_genus(alpha: &Partition, g: u32) -> bool {
    is_reduced(alpha) && alpha.genus().0 == g && is_semiprimitive(alpha).unwrap_or(false)
}

/// All semiprimitive partitions of genus `g` that are not primitive, one
/// entry per cyclic orbit, generated by repeatedly splitting cycles of the
/// primitive catalogue.
pub fn enumerate_semiprimitive(g: u32, opts: &SearchOptions) -> Result<Vec<CatalogueEntry>> {
    semiprimitive_from(&enumerate_primitive(g, opts)?, g)
}

/// The semiprimitive-only entries reachable from a given primitive catalogue.
pub fn semiprimitive_from(primitives: &[CatalogueEntry], g: u32) -> Result<Vec<CatalogueEntry>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut layer: Vec<Partition> = primitives
        .iter()
        .map(|e| e.representative.clone())
        .collect();
    let mut entries = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for alpha in cycle_splits(beta) {
                if !is_semiprimitive_of_genus(&alpha, g) {
                    continue;
                }
                let canon = canonical_representative(&alpha);
                if seen.insert(canon.images()) {
                    entries.push(CatalogueEntry::from_partition(&canon)?);
                    next.push(canon);
                }
            }
        }
        layer = next;
    }
    // Splits generate all cyclic conjugates; keep only the orbit classes.
    sort_entries(&mut entries);
    Ok(entries)
}

/// The full catalogue (primitive and semiprimitive-only entries).
pub fn enumerate_catalogue(g: u32, opts: &SearchOptions) -> Result<Vec<CatalogueEntry>> {
    let mut all = enumerate_primitive(g, opts)?;
    all.extend(semiprimitive_from(&all, g)?);
    sort_entries(&mut all);
    Ok(all)
}

/// Semiprimitive-but-not-primitive partitions of genus `g` on `n` points by
/// direct filtering of all reduced partitions.
pub fn semiprimitive_by_filter(n: usize, g: u32) -> Vec<Partition> {
    let zsum = (n + 1).saturating_sub(2 * g as usize);
    if n == 0 || zsum < 2 {
        return Vec::new();
    }
    let constraints = Constraints {
        n,
        min_block: 2,
        no_dual_fixed_points: true,
        min_blocks: 1,
        max_blocks: zsum - 1,
    };
    let mut found: Vec<Vec<u32>> = search(
        &constraints,
        Vec::new,
        |acc: &mut Vec<Vec<u32>>, leaf| {
            let (dual, _) = dual_cycle_stats(leaf.images);
            if genus_of(n, leaf.blocks, dual) == g {
                acc.push(leaf.to_images());
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    found.sort();
    found
        .into_iter()
        .map(|im| Partition::new_unchecked(Permutation::from_raw(im)))
        .filter(|p| {
            is_semiprimitive(p).unwrap_or(false)
                && !crate::primitive::is_primitive(p).unwrap_or(true)
        })
        .collect()
}

/// Writes entries as JSON lines.
pub fn write_catalogue(entries: &[CatalogueEntry], mut out: impl Write) -> std::io::Result<()> {
    for e in entries {
        let line = serde_json::to_string(e).expect("entry serializes");
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Reads a JSON-lines catalogue, validating every entry.
pub fn read_catalogue(input: impl BufRead) -> Result<Vec<CatalogueEntry>> {
    let mut entries = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::Catalogue {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let entry: CatalogueEntry = serde_json::from_str(&line).map_err(|e| Error::Catalogue {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        entries.push(entry);
    }
    Ok(entries)
}

/// Per-`(n, cycle type)` totals: the number of partitions, counting every
/// member of every orbit.
pub fn totals_by_cycle_type(entries: &[CatalogueEntry]) -> BTreeMap<(usize, Vec<usize>), usize> {
    let mut totals = BTreeMap::new();
    for e in entries {
        *totals.entry((e.m, e.cycle_type.clone())).or_insert(0) += e.orbit_size;
    }
    totals
}
