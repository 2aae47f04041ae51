//! Depth-first generation of set partitions as restricted growth strings,
//! with the cycle images maintained incrementally and optional pruning.

use rayon::prelude::*;

/// Largest size the search engine handles.
pub const MAX_SEARCH_N: usize = 32;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Constraints {
    pub n: usize,
    /// Every block must have at least this many elements (1 or 2).
    pub min_block: usize,
    /// Reject `α(i) = i+1` (and `α(n) = 1`) as soon as it is created.
    pub no_dual_fixed_points: bool,
    pub min_blocks: usize,
    pub max_blocks: usize,
}

impl Constraints {
    pub fn all(n: usize) -> Self {
        Constraints {
            n,
            min_block: 1,
            no_dual_fixed_points: false,
            min_blocks: 0,
            max_blocks: usize::MAX,
        }
    }
}

#[derive(Clone)]
struct State {
    next: usize,
    blocks: usize,
    singles: usize,
    images: [u8; MAX_SEARCH_N],
    first: [u8; MAX_SEARCH_N],
    last: [u8; MAX_SEARCH_N],
    len: [u8; MAX_SEARCH_N],
}

impl State {
    fn new() -> Self {
        State {
            next: 0,
            blocks: 0,
            singles: 0,
            images: [0; MAX_SEARCH_N],
            first: [0; MAX_SEARCH_N],
            last: [0; MAX_SEARCH_N],
            len: [0; MAX_SEARCH_N],
        }
    }
}

/// A completed partition handed to the visitor: 0-based images and block count.
pub(crate) struct Leaf<'a> {
    pub images: &'a [u8],
    pub blocks: usize,
}

impl Leaf<'_> {
    pub fn to_images(&self) -> Vec<u32> {
        self.images.iter().map(|&v| v as u32).collect()
    }
}

fn feasible(c: &Constraints, s: &State) -> bool {
    let remaining = c.n - s.next;
    if c.min_block >= 2 {
        if remaining < s.singles {
            return false;
        }
        s.blocks + (remaining - s.singles) / 2 >= c.min_blocks
    } else {
        s.blocks + remaining >= c.min_blocks
    }
}

/// Children of `s`: the placements of element `s.next`.
fn children(c: &Constraints, s: &State, mut f: impl FnMut(&State)) {
    let cur = s.next;
    let n = c.n;
    for b in 0..s.blocks {
        let last = s.last[b] as usize;
        if c.no_dual_fixed_points {
            if last + 1 == cur {
                continue;
            }
            if cur + 1 == n && s.first[b] == 0 {
                continue;
            }
        }
        let mut t = s.clone();
        t.images[last] = cur as u8;
        t.last[b] = cur as u8;
        t.len[b] += 1;
        if t.len[b] == 2 {
            t.singles -= 1;
        }
        t.next += 1;
        if feasible(c, &t) {
            f(&t);
        }
    }
    if s.blocks < c.max_blocks {
        let mut t = s.clone();
        let b = t.blocks;
        t.first[b] = cur as u8;
        t.last[b] = cur as u8;
        t.len[b] = 1;
        t.blocks += 1;
        t.singles += 1;
        t.next += 1;
        if feasible(c, &t) {
            f(&t);
        }
    }
}

fn close(c: &Constraints, s: &mut State) -> bool {
    if c.min_block >= 2 && s.singles > 0 {
        return false;
    }
    if s.blocks < c.min_blocks {
        return false;
    }
    for b in 0..s.blocks {
        s.images[s.last[b] as usize] = s.first[b];
    }
    true
}

fn dfs<T>(c: &Constraints, s: &State, acc: &mut T, visit: &(impl Fn(&mut T, &Leaf) + Sync)) {
    if s.next == c.n {
        let mut s = s.clone();
        if close(c, &mut s) {
            visit(
                acc,
                &Leaf {
                    images: &s.images[..c.n],
                    blocks: s.blocks,
                },
            );
        }
        return;
    }
    children(c, s, |t| dfs(c, t, acc, visit));
}

/// Visits every partition satisfying `c`, in parallel; per-worker
/// accumulators are combined with `merge`.
pub(crate) fn search<T: Send>(
    c: &Constraints,
    init: impl Fn() -> T + Sync + Send,
    visit: impl Fn(&mut T, &Leaf) + Sync,
    merge: impl Fn(T, T) -> T + Sync + Send,
) -> T {
    assert!(c.n <= MAX_SEARCH_N, "search size {} too large", c.n);
    if c.n == 0 {
        let mut acc = init();
        if c.min_blocks == 0 {
            visit(
                &mut acc,
                &Leaf {
                    images: &[],
                    blocks: 0,
                },
            );
        }
        return acc;
    }
    // Expand a frontier sequentially, then fan out.
    let mut frontier = vec![State::new()];
    while frontier.len() < 512 && frontier[0].next < c.n.saturating_sub(4) {
        let mut next = Vec::new();
        for s in &frontier {
            children(c, s, |t| next.push(t.clone()));
        }
        if next.is_empty() {
            return init();
        }
        frontier = next;
    }
    frontier
        .par_iter()
        .fold(&init, |mut acc, s| {
            dfs(c, s, &mut acc, &visit);
            acc
        })
        .reduce(&init, merge)
}

/// Number of cycles of `α⁻¹ζ_n`, and the length of its shortest cycle.
pub(crate) fn dual_cycle_stats(images: &[u8]) -> (usize, usize) {
    let n = images.len();
    let mut inv = [0u8; MAX_SEARCH_N];
    for (i, &v) in images.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    let mut seen = [false; MAX_SEARCH_N];
    let (mut count, mut shortest) = (0, usize::MAX);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            len += 1;
            j = inv[(j + 1) % n] as usize;
        }
        shortest = shortest.min(len);
    }
    (count, shortest)
}

/// Genus from block count and dual cycle count.
pub(crate) fn genus_of(n: usize, blocks: usize, dual_cycles: usize) -> u32 {
    if n == 0 {
        return 0;
    }
    let z = blocks + dual_cycles;
    debug_assert!(z <= n + 1 && (n + 1 - z).is_multiple_of(2));
    ((n + 1 - z) / 2) as u32
}
