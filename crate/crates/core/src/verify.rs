//! Named verification checks with time budgets, grouped into suites.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::algebra::{
    delta_identities, delta_squared, gessel_gamma, gessel_general, ratio, BivariatePoly,
    TruncatedSeries,
};
use crate::config::Config;
use crate::enumerate::{
    canonical_representative, census, census_genera, enumerate_partitions, enumerate_primitive,
    narayana, semiprimitive_from, totals_by_cycle_type, CatalogueEntry, SearchOptions,
};
use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::pipeline::{
    catalan_specialization, count_from_full, full_gf, genus_one_reduced, genus_two_display,
    genus_two_full_numerator, genus_two_reduced, is_matching_entry, reduced_gf,
    reduced_gf_filtered, verify_red2, ReducedGF,
};
use crate::primitive::{merge_parallel, parallel_pairs};
use crate::reduction::{
    dual_fixed_points, fixed_points, is_reduced, reduce, reduce_with, remove_dual_fixed_point,
    remove_fixed_point,
};

/// Genus-2 counts `p(n,k)` for `6 ≤ n ≤ 12`, `k ≥ 2`.
pub const TABLE_THREE: &[(usize, &[u64])] = &[
    (6, &[1]),
    (7, &[7, 21]),
    (8, &[28, 210, 161]),
    (9, &[84, 1134, 2184, 777]),
    (10, &[210, 4410, 15330, 13713, 2835]),
    (11, &[462, 13860, 75075, 121275, 63063, 8547]),
    (12, &[924, 37422, 289905, 729960, 685608, 233772, 22407]),
];

/// Genus-2 primitive totals by `(n, cycle type)`.
pub fn table_one() -> BTreeMap<(usize, Vec<usize>), usize> {
    let twos = |n: usize| vec![2; n / 2];
    let with = |big: &[usize], n: usize| {
        let rest: usize = big.iter().sum();
        let mut v = big.to_vec();
        v.extend(vec![2; (n - rest) / 2]);
        v
    };
    let mut t = BTreeMap::new();
    for (n, c) in [
        (8, 21),
        (10, 168),
        (12, 483),
        (14, 651),
        (16, 420),
        (18, 105),
    ] {
        t.insert((n, twos(n)), c);
    }
    for (n, c) in [(7, 14), (9, 141), (11, 407), (13, 455), (15, 175)] {
        t.insert((n, with(&[3], n)), c);
    }
    for (n, c) in [(6, 1), (8, 20), (10, 65), (12, 52)] {
        t.insert((n, with(&[3, 3], n)), c);
    }
    for (n, c) in [(8, 6), (10, 15), (12, 9)] {
        t.insert((n, with(&[4], n)), c);
    }
    t
}

/// Semiprimitive-only representatives of genus 2 with their orbit sizes.
pub const TABLE_TWO: &[(usize, &str, usize)] = &[
    (10, "(1,3,5)(6,8,10)(2,9)(4,7)", 5),
    (10, "(1,3,9)(4,6,8)(2,10)(5,7)", 5),
    (10, "(1,3,5)(6,8,10)(2,7)(4,9)", 5),
    (12, "(1,4,7)(8,10,12)(2,5)(3,6)(9,11)", 12),
    (12, "(1,4,11)(5,8,10)(2,6)(3,7)(9,12)", 12),
    (12, "(1,4,6)(7,10,12)(2,8)(3,9)(5,11)", 6),
    (12, "(1,3,6)(7,9,12)(2,8)(4,10)(5,11)", 6),
    (14, "(1,4,7)(8,11,14)(2,5)(3,6)(9,12)(10,13)", 7),
    (14, "(1,4,12)(5,8,11)(2,6)(3,7)(9,13)(10,14)", 7),
    (14, "(1,4,7)(8,11,14)(2,9)(3,10)(5,12)(6,13)", 7),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Identities,
    Confluence,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tables" => Ok(Suite::Tables),
            "identities" => Ok(Suite::Identities),
            "confluence" => Ok(Suite::Confluence),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidConfig(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {} {} ({:.2}s",
            self.id,
            self.title,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(b) = self.budget {
            write!(f, " / {}s", b.as_secs())?;
        }
        write!(f, ")")?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

type Check = Result<(bool, String)>;

fn timed(
    id: &str,
    title: &str,
    budget: Option<Duration>,
    f: impl FnOnce() -> Check,
) -> CheckOutcome {
    let start = Instant::now();
    let res = f();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match res {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail = format!("over budget; {detail}");
        }
    }
    CheckOutcome {
        id: id.to_string(),
        title: title.to_string(),
        passed,
        detail,
        elapsed,
        budget,
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn summarize(mismatches: &[String]) -> (bool, String) {
    match mismatches.len() {
        0 => (true, String::new()),
        m => (
            false,
            format!(
                "{m} mismatches, first: {}",
                mismatches[..m.min(3)].join("; ")
            ),
        ),
    }
}

/// Runs checks, sharing the genus-2 catalogue between them.
pub struct Verifier {
    cfg: Config,
    primitive: OnceLock<Result<Vec<CatalogueEntry>>>,
    semiprimitive: OnceLock<Result<Vec<CatalogueEntry>>>,
}

impl Verifier {
    pub fn new(cfg: Config) -> Self {
        Verifier {
            cfg,
            primitive: OnceLock::new(),
            semiprimitive: OnceLock::new(),
        }
    }

    fn primitive_two(&self) -> Result<&[CatalogueEntry]> {
        self.primitive
            .get_or_init(|| enumerate_primitive(2, &SearchOptions::default()))
            .as_deref()
            .map_err(Clone::clone)
    }

    fn semiprimitive_two(&self) -> Result<&[CatalogueEntry]> {
        let prims = self.primitive_two()?;
        self.semiprimitive
            .get_or_init(|| semiprimitive_from(prims, 2))
            .as_deref()
            .map_err(Clone::clone)
    }

    fn catalogue_two(&self) -> Result<Vec<CatalogueEntry>> {
        let mut all = self.primitive_two()?.to_vec();
        all.extend_from_slice(self.semiprimitive_two()?);
        Ok(all)
    }

    fn reduced_two(&self) -> Result<ReducedGF> {
        reduced_gf(&self.catalogue_two()?, 2)
    }

    /// Acceptance criterion `i` (1 to 10).
    pub fn criterion(&self, i: u8) -> CheckOutcome {
        let id = i.to_string();
        match i {
            1 => timed(
                &id,
                "genus-0 census equals Narayana numbers, n <= 10",
                secs(60),
                || self.genus_zero_census(),
            ),
            2 => timed(
                &id,
                "genus-1 closed form equals census, n <= 11",
                secs(300),
                || self.genus_one_census(),
            ),
            3 => timed(
                &id,
                "genus-1 catalogue and reduced generating function",
                secs(60),
                || self.genus_one_catalogue(),
            ),
            4 => timed(
                &id,
                "genus-2 primitive totals by cycle type",
                secs(600),
                || self.table_one_check(),
            ),
            5 => timed(
                &id,
                "genus-2 semiprimitive totals and orbit sizes",
                secs(60),
                || self.table_two_check(),
            ),
            6 => timed(&id, "genus-2 reduced generating function", secs(60), || {
                self.reduced_two_check()
            }),
            7 => timed(&id, "genus-2 full generating function", secs(60), || {
                self.full_two_check()
            }),
            8 => timed(
                &id,
                "genus-2 counts by formula and census, n <= 12",
                secs(1800),
                || self.table_three_check(),
            ),
            9 => timed(&id, "genus-2 matchings series", secs(60), || {
                self.matchings_check()
            }),
            10 => {
                let parts = [
                    self.confluence(),
                    self.genus_preservation(),
                    self.back_points(),
                    self.identities(),
                    self.gessel_agreement(),
                ];
                let elapsed = parts.iter().map(|p| p.elapsed).sum();
                let failed: Vec<String> = parts
                    .iter()
                    .filter(|p| !p.passed)
                    .map(|p| format!("{} [{}]", p.title, p.detail))
                    .collect();
                let budget = Duration::from_secs(600);
                let passed = failed.is_empty() && elapsed <= budget;
                CheckOutcome {
                    id,
                    title: "property suites".into(),
                    passed,
                    detail: failed.join("; "),
                    elapsed,
                    budget: Some(budget),
                }
            }
            _ => timed(&id, "unknown criterion", None, || {
                Ok((false, "no such criterion".into()))
            }),
        }
    }

    pub fn run(&self, suite: Suite) -> Vec<CheckOutcome> {
        match suite {
            Suite::Tables => (1..=9).map(|i| self.criterion(i)).collect(),
            Suite::Identities => vec![
                self.identities(),
                self.gessel_agreement(),
                self.gessel_series(),
                self.red2(),
            ],
            Suite::Confluence => vec![
                self.confluence(),
                self.genus_preservation(),
                self.back_points(),
            ],
            Suite::All => {
                let mut out: Vec<CheckOutcome> = (1..=10).map(|i| self.criterion(i)).collect();
                out.push(self.gessel_series());
                out.push(self.red2());
                out
            }
        }
    }

    fn genus_zero_census(&self) -> Check {
        let c = census_genera(10, &[0], self.cfg.brute_limit)?;
        let mut bad = Vec::new();
        for n in 1..=10 {
            for k in 1..=n {
                let (got, want) = (c.get(n, k, 0), narayana(n, k));
                if got != want {
                    bad.push(format!("({n},{k}) census {got} vs {want}"));
                }
            }
        }
        Ok(summarize(&bad))
    }

    fn genus_one_census(&self) -> Check {
        let f = full_gf(&genus_one_reduced());
        let c = census(11, 1, self.cfg.brute_limit)?;
        let mut bad = Vec::new();
        for n in 1..=11 {
            for k in 0..=n {
                let (got, want) = (count_from_full(&f, n, k)?, c.get(n, k, 1));
                if got != want {
                    bad.push(format!("({n},{k}) formula {got} vs census {want}"));
                }
            }
        }
        Ok(summarize(&bad))
    }

    fn genus_one_catalogue(&self) -> Check {
        let opts = SearchOptions::default();
        let prims = enumerate_primitive(1, &opts)?;
        let reps: Vec<String> = prims.iter().map(|e| e.representative.to_string()).collect();
        let expected = ["(1,3)(2,4)", "(1,4)(2,5)(3,6)"];
        if reps != expected {
            return Ok((false, format!("primitives {reps:?}")));
        }
        let mut all = prims.clone();
        all.extend(semiprimitive_from(&prims, 1)?);
        let r = reduced_gf(&all, 1)?;
        if r != genus_one_reduced() {
            return Ok((false, format!("R = {r}")));
        }
        Ok((true, format!("R = {r}")))
    }

    fn table_one_check(&self) -> Check {
        let got = totals_by_cycle_type(self.primitive_two()?);
        let want = table_one();
        let mut bad = Vec::new();
        for key in got.keys().chain(want.keys()).sorted().dedup() {
            let (g, w) = (
                got.get(key).copied().unwrap_or(0),
                want.get(key).copied().unwrap_or(0),
            );
            if g != w {
                bad.push(format!("n={} {:?}: {g} vs {w}", key.0, key.1));
            }
        }
        let (ok, mut detail) = summarize(&bad);
        if ok {
            detail = "n=15 one 3-cycle = 175 (printed table shows 0)".into();
        }
        Ok((ok, detail))
    }

    fn table_two_check(&self) -> Check {
        let semis = self.semiprimitive_two()?;
        let mut bad = Vec::new();
        let mut totals: BTreeMap<usize, usize> = BTreeMap::new();
        for e in semis {
            *totals.entry(e.m).or_default() += e.orbit_size;
        }
        let want: BTreeMap<usize, usize> = [(10, 15), (12, 36), (14, 21)].into();
        if totals != want {
            bad.push(format!("totals {totals:?}"));
        }
        for &(n, rep, size) in TABLE_TWO {
            let canon = canonical_representative(&Partition::parse(rep, n)?);
            match semis.iter().find(|e| e.representative == canon) {
                Some(e) if e.orbit_size == size => {}
                Some(e) => bad.push(format!("{rep}: orbit {} vs {size}", e.orbit_size)),
                None => bad.push(format!("{rep}: missing")),
            }
        }
        Ok(summarize(&bad))
    }

    fn reduced_two_check(&self) -> Check {
        let r = self.reduced_two()?;
        let want = genus_two_reduced();
        Ok((
            r == want,
            if r == want {
                String::new()
            } else {
                format!("R = {r}")
            },
        ))
    }

    fn full_two_check(&self) -> Check {
        let f = full_gf(&self.reduced_two()?);
        let mut bad = Vec::new();
        if f.form.terms().count() != 1 || f.form.coefficient(-11) != genus_two_full_numerator() {
            bad.push(format!("normal form {}", f.form));
        }
        let display = genus_two_display();
        if display.normalized() != f.form {
            bad.push("multi-power display does not normalize to the same form".into());
        }
        if display.to_delta_element()? != f.raw.to_delta_element()? {
            bad.push("multi-power display differs from the term sum".into());
        }
        Ok(summarize(&bad))
    }

    fn table_three_check(&self) -> Check {
        let f = full_gf(&self.reduced_two()?);
        let start = Instant::now();
        let mut formula = BTreeMap::new();
        for n in 0..=12 {
            for k in 0..=n {
                formula.insert((n, k), count_from_full(&f, n, k)?);
            }
        }
        let formula_time = start.elapsed();
        let mut bad = Vec::new();
        for &(n, row) in TABLE_THREE {
            for (i, &v) in row.iter().enumerate() {
                let k = i + 2;
                if formula[&(n, k)] != BigUint::from(v) {
                    bad.push(format!(
                        "({n},{k}) formula {} vs table {v}",
                        formula[&(n, k)]
                    ));
                }
            }
        }
        if formula_time > Duration::from_secs(1) {
            bad.push(format!(
                "formula path took {:.2}s",
                formula_time.as_secs_f64()
            ));
        }
        let brute = census(12, 2, self.cfg.brute_limit)?;
        for (&(n, k), v) in &formula {
            if n >= 1 && brute.get(n, k, 2) != *v {
                bad.push(format!(
                    "({n},{k}) census {} vs formula {v}",
                    brute.get(n, k, 2)
                ));
            }
        }
        let (ok, detail) = summarize(&bad);
        let timing = format!("formula {:.3}s", formula_time.as_secs_f64());
        Ok((
            ok,
            if ok {
                timing
            } else {
                format!("{detail}; {timing}")
            },
        ))
    }

    fn matchings_check(&self) -> Check {
        let rm = reduced_gf_filtered(&self.catalogue_two()?, 2, is_matching_entry)?;
        let want = BivariatePoly::from_terms(&[(21, 8, 4), (63, 10, 5), (21, 12, 6)]);
        let mut bad = Vec::new();
        if rm.numerator != want || rm.power != 10 {
            bad.push(format!("R_M = {rm}"));
        }
        let s = catalan_specialization(&rm, 8)?;
        for (i, v) in [21i64, 483, 6468, 66066, 570570].into_iter().enumerate() {
            let t = 4 + i as i32;
            if s.coeff(t, 0) != ratio(v, 1) {
                bad.push(format!("t^{t}: {} vs {v}", s.coeff(t, 0)));
            }
        }
        Ok(summarize(&bad))
    }

    pub fn confluence(&self) -> CheckOutcome {
        timed("10a", "reduction confluence", None, || {
            let bad: Vec<String> = (0..10_000u64)
                .into_par_iter()
                .filter_map(|seed| {
                    let mut rng = StdRng::seed_from_u64(seed);
                    let alpha = random_permutation(&mut rng, 12);
                    let (target, _) = reduce(&alpha);
                    (0..20)
                        .any(|_| {
                            reduce_with(&alpha, |opts| rng.gen_range(0..opts.len())).0 != target
                        })
                        .then(|| alpha.to_string())
                })
                .collect();
            Ok(summarize(&bad))
        })
    }

    pub fn genus_preservation(&self) -> CheckOutcome {
        timed(
            "10b",
            "genus preserved by reductions and merges, n <= 9",
            None,
            || {
                let mut bad = Vec::new();
                for n in 2..=9 {
                    let found: Vec<String> = (1..=n)
                        .permutations(n)
                        .par_bridge()
                        .filter_map(|images| {
                            let alpha = Permutation::from_images(&images).ok()?;
                            let g = alpha.genus();
                            let ok = fixed_points(&alpha)
                                .into_iter()
                                .all(|i| remove_fixed_point(&alpha, i).map(|b| b.genus()) == Ok(g))
                                && dual_fixed_points(&alpha).into_iter().all(|i| {
                                    remove_dual_fixed_point(&alpha, i).map(|b| b.genus()) == Ok(g)
                                });
                            (!ok).then(|| alpha.to_string())
                        })
                        .collect();
                    bad.extend(found);
                }
                for n in 1..=9 {
                    for alpha in enumerate_partitions(n, self.cfg.brute_limit, |p| is_reduced(p))? {
                        for pair in parallel_pairs(&alpha)? {
                            let merged = merge_parallel(&alpha, pair)?;
                            if merged.genus() != alpha.genus() {
                                bad.push(format!("{alpha} merge {pair}"));
                            }
                        }
                    }
                }
                Ok(summarize(&bad))
            },
        )
    }

    pub fn back_points(&self) -> CheckOutcome {
        timed("10c", "back points count twice the genus", None, || {
            let mut rng = StdRng::seed_from_u64(0x6261636b);
            let mut bad = Vec::new();
            for _ in 0..10_000 {
                let alpha = random_permutation(&mut rng, 14);
                let total = alpha.back_points().len() + alpha.dual().back_points().len();
                if total != 2 * alpha.genus().0 as usize {
                    bad.push(alpha.to_string());
                }
            }
            Ok(summarize(&bad))
        })
    }

    pub fn identities(&self) -> CheckOutcome {
        timed("10d", "Delta identities at order 12", None, || {
            let r = delta_identities(self.cfg.order)?;
            Ok((r.all_hold(), r.failures().join(", ")))
        })
    }

    pub fn gessel_agreement(&self) -> CheckOutcome {
        timed(
            "10e",
            "binomial and rising-factorial forms agree",
            None,
            || {
                let mut bad = Vec::new();
                for m in 0..=5u32 {
                    let alpha = ratio(2 * m as i64 + 1, 2);
                    for n in 0..=12i64 {
                        for k in 0..=n {
                            if gessel_gamma(m, n, k) != gessel_general(&alpha, n, k) {
                                bad.push(format!("m={m} ({n},{k})"));
                            }
                        }
                    }
                }
                Ok(summarize(&bad))
            },
        )
    }

    pub fn gessel_series(&self) -> CheckOutcome {
        timed(
            "x1",
            "binomial form equals series of odd negative powers",
            None,
            || {
                let d2 = TruncatedSeries::new(&delta_squared(), 10);
                let mut bad = Vec::new();
                for m in 0..=5i64 {
                    let s = d2.pow_rational(&ratio(-(2 * m + 1), 2))?;
                    for n in 0..=10i64 {
                        for k in 0..=n {
                            let g = gessel_gamma(m as u32, n, k);
                            if !g.is_integer() || g != s.coeff(n as i32, k as i32) {
                                bad.push(format!("m={m} ({n},{k})"));
                            }
                        }
                    }
                }
                Ok(summarize(&bad))
            },
        )
    }

    pub fn red2(&self) -> CheckOutcome {
        timed("x2", "pointed substitution formula agrees", None, || {
            let mut bad = Vec::new();
            for (r, order) in [
                (genus_one_reduced(), 10),
                (genus_two_reduced(), self.cfg.order),
            ] {
                let cmp = verify_red2(&r, order)?;
                if !cmp.is_equal() {
                    bad.push(format!("genus {} at {:?}", r.genus, &cmp.mismatches[..1]));
                }
            }
            Ok(summarize(&bad))
        })
    }
}

/// A uniformly random permutation of uniformly random size in `1..=max_n`.
pub fn random_permutation(rng: &mut impl Rng, max_n: usize) -> Permutation {
    let n = rng.gen_range(1..=max_n);
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).expect("shuffled identity is a bijection")
}
