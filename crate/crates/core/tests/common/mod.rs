#![allow(dead_code)]

use partition_genus::{Partition, Permutation};
use proptest::prelude::*;

pub fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

/// A set partition from a restricted growth string.
pub fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(0..n, n))
        .prop_map(|raw| {
            let mut labels = Vec::with_capacity(raw.len());
            let mut next = 0;
            for r in raw {
                let l = if r < next { r } else { next };
                if l == next {
                    next += 1;
                }
                labels.push(l);
            }
            let mut blocks = vec![Vec::new(); next];
            for (i, l) in labels.into_iter().enumerate() {
                blocks[l].push(i + 1);
            }
            Partition::from_blocks(blocks.iter().map(Vec::len).sum(), &blocks).unwrap()
        })
}

/// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
pub fn is_noncrossing(p: &Partition) -> bool {
    let n = p.len();
    let mut block = vec![0; n + 1];
    for (idx, b) in p.blocks().iter().enumerate() {
        for &e in b {
            block[e] = idx;
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    if block[a] == block[c] && block[b] == block[d] && block[a] != block[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every set partition of `{1..n}`, by a recursive restricted growth walk.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn walk(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Partition>) {
        if i > n {
            out.push(Partition::from_blocks(n, blocks).unwrap());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            walk(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        walk(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    walk(1, n, &mut Vec::new(), &mut out);
    out
}

/// A reduced partition obtained by reducing a random one.
pub fn reduced_partition(max_n: usize) -> impl Strategy<Value = Partition> {
    partition(max_n).prop_map(|p| {
        let (r, _) = partition_genus::reduction::reduce(&p);
        Partition::try_from(r).unwrap()
    })
}
