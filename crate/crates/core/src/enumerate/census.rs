use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::search::{dual_cycle_stats, genus_of, search, Constraints};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Brute,
    Formula,
    Series,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Brute => "brute",
            Provenance::Formula => "formula",
            Provenance::Series => "series",
        })
    }
}

/// Counts `p(n, k)` of partitions of `{1..n}` with `k` blocks and genus `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub provenance: Provenance,
    pub counts: BTreeMap<(usize, usize, u32), BigUint>,
}

impl Census {
    pub fn new(provenance: Provenance) -> Self {
        Census {
            provenance,
            counts: BTreeMap::new(),
        }
    }

    /// The count at `(n, k, g)`, zero when absent.
    pub fn get(&self, n: usize, k: usize, g: u32) -> BigUint {
        self.counts.get(&(n, k, g)).cloned().unwrap_or_default()
    }

    /// Nonzero `(k, count)` cells of row `n` for genus `g`.
    pub fn row(&self, n: usize, g: u32) -> Vec<(usize, BigUint)> {
        self.counts
            .iter()
            .filter(|((nn, _, gg), c)| *nn == n && *gg == g && **c != BigUint::default())
            .map(|((_, k, _), c)| (*k, c.clone()))
            .collect()
    }

    /// CSV lines `n,k,count` for genus `g`.
    pub fn to_csv(&self, g: u32) -> String {
        let mut out = String::from("n,k,count\n");
        for ((n, k, gg), c) in &self.counts {
            if *gg == g {
                out.push_str(&format!("{n},{k},{c}\n"));
            }
        }
        out
    }
}

/// Brute-force census over every set partition of `{1..n}`, `1 ≤ n ≤ n_max`,
/// keeping the requested genera.
pub fn census_genera(n_max: usize, genera: &[u32], limit: usize) -> Result<Census> {
    if n_max > limit {
        return Err(Error::LimitExceeded { n: n_max, limit });
    }
    let mut census = Census::new(Provenance::Brute);
    for n in 1..=n_max {
        let width = n / 2 + 2;
        let table: Vec<u64> = search(
            &Constraints::all(n),
            || vec![0u64; (n + 1) * width],
            |acc, leaf| {
                let (dual, _) = dual_cycle_stats(leaf.images);
                let g = genus_of(n, leaf.blocks, dual) as usize;
                acc[leaf.blocks * width + g] += 1;
            },
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
        for k in 1..=n {
            for &g in genera {
                let g_idx = g as usize;
                if g_idx < width {
                    let c = table[k * width + g_idx];
                    if c > 0 {
                        census.counts.insert((n, k, g), BigUint::from(c));
                    }
                }
            }
        }
    }
    Ok(census)
}

pub fn census(n_max: usize, g: u32, limit: usize) -> Result<Census> {
    census_genera(n_max, &[g], limit)
}

/// Narayana number `(1/n) C(n,k) C(n,k-1)`, with `N(0,0) = 1`.
pub fn narayana(n: usize, k: usize) -> BigUint {
    use num_integer::binomial;
    if n == 0 {
        return BigUint::from((k == 0) as u8);
    }
    if k == 0 || k > n {
        return BigUint::default();
    }
    let n_big = BigUint::from(n);
    binomial(n_big.clone(), BigUint::from(k)) * binomial(n_big.clone(), BigUint::from(k - 1))
        / n_big
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_zero_is_narayana() {
        let c = census(9, 0, 13).unwrap();
        for n in 1..=9 {
            for k in 1..=n {
                assert_eq!(c.get(n, k, 0), narayana(n, k), "n={n} k={k}");
            }
        }
        assert_eq!(c.get(6, 3, 0), BigUint::from(50u32));
    }

    #[test]
    fn genus_two_row_eight() {
        let c = census(8, 2, 13).unwrap();
        let row: Vec<(usize, u32)> = c
            .row(8, 2)
            .into_iter()
            .map(|(k, v)| (k, u32::try_from(v).unwrap()))
            .collect();
        assert_eq!(row, vec![(2, 28), (3, 210), (4, 161)]);
    }

    #[test]
    fn limit_enforced() {
        assert_eq!(
            census(14, 2, 13),
            Err(Error::LimitExceeded { n: 14, limit: 13 })
        );
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana(0, 0), BigUint::from(1u8));
        assert_eq!(narayana(3, 2), BigUint::from(3u8));
        assert_eq!(narayana(5, 0), BigUint::default());
        let cat5: BigUint = (1..=5).map(|k| narayana(5, k)).sum();
        assert_eq!(cat5, BigUint::from(42u8));
    }

    #[test]
    fn csv_format() {
        let c = census(4, 1, 13).unwrap();
        assert_eq!(c.to_csv(1), "n,k,count\n4,2,1\n");
    }
}
