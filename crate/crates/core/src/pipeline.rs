//! From a semiprimitive catalogue to the reduced generating function
//! `R(x,y)`, then to the full generating function `P(x,y)` in `Δ`-normal
//! form, then to the counts `p(n,k)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{
    catalan_series, d_series, delta_squared, gessel_gamma, gessel_general, one_minus_q, rat, ratio,
    rational_series, u_poly, x_series, y_series, BivariatePoly, DeltaElement, LaurentDeltaForm,
    RationalFn, TruncatedSeries,
};
use crate::enumerate::{narayana, CatalogueEntry};
use crate::error::{Error, Result};

/// `R(x,y) = numerator / (1 - x²y)^power` for one genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGF {
    pub numerator: BivariatePoly,
    pub power: u32,
    pub genus: u32,
}

impl ReducedGF {
    pub fn zero(genus: u32) -> Self {
        ReducedGF {
            numerator: BivariatePoly::zero(),
            power: 0,
            genus,
        }
    }

    pub fn as_rational(&self) -> RationalFn {
        RationalFn::new(self.numerator.clone(), one_minus_q().pow(self.power))
            .expect("nonzero denominator")
    }

    /// Text form `num / (1 - x^2*y)^P`.
    pub fn to_compact_string(&self) -> String {
        if self.numerator.is_zero() {
            return "0".into();
        }
        format!(
            "({}) / (1 - x^2*y)^{}",
            self.numerator.to_compact_string(),
            self.power
        )
    }
}

impl fmt::Display for ReducedGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

/// `P(x,y)` as a sum of Laurent polynomials times powers of `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullGF {
    /// Sum of the per-term closed forms, before collecting powers of `Δ`.
    pub raw: LaurentDeltaForm,
    /// The same function with every odd power folded onto the smallest one.
    pub form: LaurentDeltaForm,
    pub genus: u32,
}

impl fmt::Display for FullGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.form, f)
    }
}

/// A term `weight · x^i1 y^i2 / (1 - x²y)^i3` of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTerm {
    pub i1: i32,
    pub i2: i32,
    pub i3: u32,
    pub weight: BigRational,
}

/// Average contribution of one cyclic class:
/// `x^m y^c [m0(1-x²y) + m1 + m2(1+x²y)] / [m (1-x²y)^{p+1}]`.
pub fn avg_contribution(entry: &CatalogueEntry) -> Result<RationalFn> {
    let (num, power) = contribution_parts(entry)?;
    RationalFn::new(num, one_minus_q().pow(power))
}

fn contribution_parts(entry: &CatalogueEntry) -> Result<(BivariatePoly, u32)> {
    if entry.m == 0 || entry.m0 + entry.m1 + entry.m2 != entry.m {
        return Err(Error::InconsistentEntry(format!(
            "m0 + m1 + m2 = {} but m = {}",
            entry.m0 + entry.m1 + entry.m2,
            entry.m
        )));
    }
    let (m0, m1, m2) = (entry.m0 as i64, entry.m1 as i64, entry.m2 as i64);
    let bracket = BivariatePoly::from_terms(&[(m0 + m1 + m2, 0, 0), (m2 - m0, 2, 1)]);
    let num = bracket
        .shift(entry.m as i32, entry.c as i32)
        .scale(&ratio(1, entry.m as i64));
    Ok((num, entry.p as u32 + 1))
}

/// `R = Σ orbit_size · R_β̄` over the catalogue entries of genus `g`,
/// with common factors of `1 - x²y` cancelled.
pub fn reduced_gf(catalogue: &[CatalogueEntry], g: u32) -> Result<ReducedGF> {
    reduced_gf_filtered(catalogue, g, |_| true)
}

/// As [`reduced_gf`], restricted to the entries accepted by `keep`.
pub fn reduced_gf_filtered(
    catalogue: &[CatalogueEntry],
    g: u32,
    keep: impl Fn(&CatalogueEntry) -> bool,
) -> Result<ReducedGF> {
    let parts: Vec<(BivariatePoly, u32, usize)> = catalogue
        .iter()
        .filter(|e| e.genus() == g && keep(e))
        .map(|e| contribution_parts(e).map(|(num, pw)| (num, pw, e.orbit_size)))
        .collect::<Result<_>>()?;
    let Some(power) = parts.iter().map(|&(_, pw, _)| pw).max() else {
        return Ok(ReducedGF::zero(g));
    };
    let base = one_minus_q();
    let mut numerator = BivariatePoly::zero();
    for (num, pw, orbit) in &parts {
        numerator += &(num * &base.pow(power - pw)).scale(&rat(*orbit as i64));
    }
    let mut power = power;
    while power > 0 && !numerator.is_zero() {
        match numerator.div_exact(&base) {
            Some(q) => {
                numerator = q;
                power -= 1;
            }
            None => break,
        }
    }
    if numerator.is_zero() {
        return Ok(ReducedGF::zero(g));
    }
    Ok(ReducedGF {
        numerator,
        power,
        genus: g,
    })
}

/// One term per numerator monomial.
pub fn term_decompose(r: &ReducedGF) -> Vec<RTerm> {
    r.numerator
        .terms()
        .map(|(&(i1, i2), c)| RTerm {
            i1,
            i2,
            i3: r.power,
            weight: c.clone(),
        })
        .collect()
}

fn binom(n: u32, k: u32) -> BigRational {
    BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Closed form of `x^i1 y^i2 / (1 - X²y)^i3 · Δ⁻¹` with `X = (D-1)/y`.
pub fn term_to_full(i1: i32, i2: i32, i3: u32) -> LaurentDeltaForm {
    let i3s = i3 as i32;
    let neg_u = -&u_poly();
    match i1.cmp(&i3s) {
        std::cmp::Ordering::Equal => {
            LaurentDeltaForm::single(BivariatePoly::monomial(rat(1), i1, i2), -(i1 + 1))
        }
        std::cmp::Ordering::Less => {
            // ((1 - uΔ⁻¹)/2)^r = 2^{-r} Σ_j C(r,j) (-u)^j Δ^{-j}
            let r = (i3s - i1) as u32;
            let scale = ratio(1, 1i64 << r);
            let mut out = LaurentDeltaForm::zero();
            for j in 0..=r {
                let coeff = neg_u.pow(j).shift(i1, i2).scale(&(&binom(r, j) * &scale));
                out.add_term(-(i1 + 1) - j as i32, &coeff);
            }
            out
        }
        std::cmp::Ordering::Greater => {
            // ((-u - Δ)/(2xy))^r = (2xy)^{-r} Σ_j C(r,j) (-u)^{r-j} (-1)^j Δ^j
            let r = (i1 - i3s) as u32;
            let scale = ratio(1, 1i64 << r);
            let mut out = LaurentDeltaForm::zero();
            for j in 0..=r {
                let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
                let coeff = neg_u
                    .pow(r - j)
                    .shift(i3s - r as i32, i2 - r as i32)
                    .scale(&(&binom(r, j) * &scale * sign));
                out.add_term(j as i32 - (i3s + 1), &coeff);
            }
            out
        }
    }
}

/// `P = Σ weight · term_to_full`, kept both raw and in single-power form.
pub fn full_gf(r: &ReducedGF) -> FullGF {
    let mut raw = LaurentDeltaForm::zero();
    for t in term_decompose(r) {
        raw.add_form(&term_to_full(t.i1, t.i2, t.i3).scale(&t.weight));
    }
    let form = raw.normalized();
    FullGF {
        raw,
        form,
        genus: r.genus,
    }
}

/// `P₀ = D(x,y) = (1 + x - xy)/(2x) - Δ/(2x)`.
pub fn genus_zero_full() -> FullGF {
    let half_inv_x = |p: BivariatePoly| p.shift(-1, 0).scale(&ratio(1, 2));
    let mut raw = LaurentDeltaForm::zero();
    raw.add_term(
        0,
        &half_inv_x(BivariatePoly::from_terms(&[
            (1, 0, 0),
            (1, 1, 0),
            (-1, 1, 1),
        ])),
    );
    raw.add_term(1, &half_inv_x(BivariatePoly::from_terms(&[(-1, 0, 0)])));
    FullGF {
        form: raw.clone(),
        raw,
        genus: 0,
    }
}

fn delta_power_coefficient(e: i32, n: i64, k: i64) -> Result<BigRational> {
    if e == 0 {
        return Ok(if n == 0 && k == 0 {
            rat(1)
        } else {
            BigRational::zero()
        });
    }
    if e > 0 {
        return Err(Error::NotExpandable(format!(
            "positive power Delta^{e} left after normalization"
        )));
    }
    if e % 2 != 0 {
        Ok(gessel_gamma(((-e - 1) / 2) as u32, n, k))
    } else {
        Ok(gessel_general(&rat((-e / 2) as i64), n, k))
    }
}

/// Coefficient of `x^n y^k` in `P`, by Gessel's formula on each power of `Δ`.
pub fn count_from_full(f: &FullGF, n: usize, k: usize) -> Result<BigUint> {
    if f.genus == 0 {
        return Ok(narayana(n, k));
    }
    let (n, k) = (n as i64, k as i64);
    let mut total = BigRational::zero();
    for (e, p) in f.form.terms() {
        for (&(a, b), c) in p.terms() {
            let g = delta_power_coefficient(e, n - a as i64, k - b as i64)?;
            if !g.is_zero() {
                total += c * g;
            }
        }
    }
    if !total.is_integer() {
        return Err(Error::NonIntegral(format!("p({n},{k}) = {total}")));
    }
    if total.is_negative() {
        return Err(Error::Internal(format!("p({n},{k}) = {total} is negative")));
    }
    let (sign, mag) = total.to_integer().into_parts();
    debug_assert!(sign != Sign::Minus);
    Ok(mag)
}

/// Every cell `(n, k)` with `n ≤ n_max`, computed in parallel.
pub fn count_table(f: &FullGF, n_max: usize) -> Result<Vec<(usize, usize, BigUint)>> {
    let cells: Vec<(usize, usize)> = (0..=n_max)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .collect();
    cells
        .into_par_iter()
        .map(|(n, k)| count_from_full(f, n, k).map(|c| (n, k, c)))
        .collect()
}

/// Anything with an exact truncated expansion in `x`.
pub trait ToSeries {
    fn to_series(&self, order: i32) -> Result<TruncatedSeries>;
}

impl ToSeries for RationalFn {
    fn to_series(&self, order: i32) -> Result<TruncatedSeries> {
        rational_series(self, order)
    }
}

impl ToSeries for DeltaElement {
    fn to_series(&self, order: i32) -> Result<TruncatedSeries> {
        self.series(order)
    }
}

impl ToSeries for LaurentDeltaForm {
    fn to_series(&self, order: i32) -> Result<TruncatedSeries> {
        let low = self
            .terms()
            .filter_map(|(_, p)| p.min_x_degree())
            .min()
            .unwrap_or(0)
            .min(0);
        let pad = order - low;
        let d2 = TruncatedSeries::new(&delta_squared(), pad);
        let mut total = TruncatedSeries::zero(order);
        for (e, p) in self.terms() {
            let de = d2.pow_rational(&ratio(e as i64, 2))?;
            for (&(i, j), c) in p.terms() {
                total = total.add(&de.shift(i, j).scale(c));
            }
        }
        Ok(total.truncate(order))
    }
}

impl ToSeries for ReducedGF {
    fn to_series(&self, order: i32) -> Result<TruncatedSeries> {
        self.as_rational().to_series(order)
    }
}

impl ToSeries for FullGF {
    fn to_series(&self, order: i32) -> Result<TruncatedSeries> {
        if self.genus == 0 {
            return Ok(d_series(order));
        }
        self.form.to_series(order)
    }
}

/// Uniform series expansion to `x^order`.
pub fn series_of<T: ToSeries + ?Sized>(f: &T, order: i32) -> Result<TruncatedSeries> {
    f.to_series(order)
}

/// Coefficient comparison of two expansions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesComparison {
    pub order: i32,
    pub mismatches: Vec<(i32, i32)>,
}

impl SeriesComparison {
    pub fn is_equal(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn of(a: &TruncatedSeries, b: &TruncatedSeries, order: i32) -> Self {
        let keys: BTreeSet<(i32, i32)> = a
            .as_poly()
            .terms()
            .chain(b.as_poly().terms())
            .map(|(&e, _)| e)
            .filter(|&(i, _)| i <= order)
            .collect();
        let mismatches = keys
            .into_iter()
            .filter(|&(i, j)| a.coeff(i, j) != b.coeff(i, j))
            .collect();
        SeriesComparison { order, mismatches }
    }
}

/// Compares `R(xD(D+y-1)/y, y) · (1 + xD_x/D + xD_x/(D+y-1))` with the
/// expansion of `full_gf(R)` up to `x^order`.
pub fn verify_red2(r: &ReducedGF, order: i32) -> Result<SeriesComparison> {
    let pad = order + 2;
    let d = d_series(pad + 1);
    let s1 = TruncatedSeries::one(pad);
    let sx = x_series(pad);
    let sy = y_series(pad);
    let dy1 = d.add(&sy).sub(&s1);
    let big_x = sx.mul(&d).mul(&dy1).div(&sy)?;
    let dx = d.dx();
    let xdx = sx.mul(&dx);
    let factor = s1.add(&xdx.div(&d)?).add(&xdx.div(&dy1)?);
    let lhs = if r.numerator.is_zero() {
        TruncatedSeries::zero(order)
    } else {
        let num = r.numerator.eval_series(&big_x, &sy)?;
        let den = s1.sub(&big_x.mul(&big_x).mul(&sy)).pow(r.power);
        num.div(&den)?.mul(&factor).truncate(order)
    };
    let rhs = series_of(&full_gf(r), order)?;
    Ok(SeriesComparison::of(&lhs, &rhs, order))
}

/// `R(C(t), t) / √(1 - 4t)` as a series in `t` (the series variable): the
/// genus generating function of matchings by number of edges.
pub fn catalan_specialization(r: &ReducedGF, order: i32) -> Result<TruncatedSeries> {
    if r.numerator.is_zero() {
        return Ok(TruncatedSeries::zero(order));
    }
    let pad = order + 2;
    let c = catalan_series(pad);
    let t = x_series(pad);
    let num = r.numerator.eval_series(&c, &t)?;
    let den = TruncatedSeries::one(pad)
        .sub(&c.mul(&c).mul(&t))
        .pow(r.power);
    let root = TruncatedSeries::new(&BivariatePoly::from_terms(&[(1, 0, 0), (-4, 1, 0)]), pad)
        .pow_rational(&ratio(-1, 2))?;
    Ok(num.div(&den)?.mul(&root).truncate(order))
}

/// The entries whose cycles all have length 2.
pub fn is_matching_entry(e: &CatalogueEntry) -> bool {
    e.cycle_type.iter().all(|&s| s == 2)
}

/// `x^6 y^2 · r(x,y)` with the twelve-term `r` of genus 2.
pub fn genus_two_reduced_numerator() -> BivariatePoly {
    BivariatePoly::from_terms(&[
        (1, 0, 0),
        (14, 1, 1),
        (24, 2, 1),
        (21, 2, 2),
        (91, 3, 2),
        (55, 4, 2),
        (63, 4, 3),
        (91, 5, 3),
        (21, 6, 4),
        (24, 6, 3),
        (14, 7, 4),
        (1, 8, 4),
    ])
    .shift(6, 2)
}

/// `x^6 y^2 · p(x,y)`, the coefficient of `Δ⁻¹¹` in genus-2 `P`.
pub fn genus_two_full_numerator() -> BivariatePoly {
    BivariatePoly::from_terms(&[
        (8, 4, 4),
        (-4, 4, 3),
        (-15, 4, 2),
        (10, 4, 1),
        (1, 4, 0),
        (-4, 3, 3),
        (39, 3, 2),
        (-10, 3, 1),
        (-4, 3, 0),
        (-15, 2, 2),
        (-10, 2, 1),
        (6, 2, 0),
        (10, 1, 1),
        (-4, 1, 0),
        (1, 0, 0),
    ])
    .shift(6, 2)
}

/// The multi-power genus-2 sum over `Δ⁻⁷, Δ⁻⁹, Δ⁻¹¹` before folding.
pub fn genus_two_display() -> LaurentDeltaForm {
    let p =
        |c: (i64, i64), t: &[(i64, i32, i32)]| BivariatePoly::from_terms(t).scale(&ratio(c.0, c.1));
    let mut f = LaurentDeltaForm::zero();
    f.add_term(
        -11,
        &p(
            (1, 8),
            &[
                (57, 10, 6),
                (-40, 10, 5),
                (-90, 10, 4),
                (72, 10, 3),
                (1, 10, 2),
            ],
        ),
    );
    f.add_term(
        -11,
        &p((1, 2), &[(-22, 9, 5), (131, 9, 4), (-30, 9, 3), (-1, 9, 2)]),
    );
    let a = p((3, 4), &[(1, 8, 4), (4, 8, 3), (1, 8, 2)]);
    f.add_term(-9, &a);
    f.add_term(-11, &a);
    let b = p((1, 2), &[(6, 7, 3), (-1, 7, 2)]);
    f.add_term(-9, &b.scale(&rat(3)));
    f.add_term(-11, &b);
    let c = p((1, 8), &[(1, 6, 2)]);
    f.add_term(-7, &c);
    f.add_term(-9, &c.scale(&rat(6)));
    f.add_term(-11, &c);
    f
}

/// The reduced generating function of genus 2 as printed.
pub fn genus_two_reduced() -> ReducedGF {
    ReducedGF {
        numerator: genus_two_reduced_numerator(),
        power: 10,
        genus: 2,
    }
}

/// The reduced generating function of genus 1, `x⁴y²/(1-x²y)⁴`.
pub fn genus_one_reduced() -> ReducedGF {
    ReducedGF {
        numerator: BivariatePoly::from_terms(&[(1, 4, 2)]),
        power: 4,
        genus: 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::EntryKind;
    use crate::Partition;

    fn entry(rep: &str, n: usize, c: usize, p: usize, m1: usize) -> CatalogueEntry {
        CatalogueEntry {
            representative: Partition::parse(rep, n).unwrap(),
            m: n,
            c,
            p,
            m0: 0,
            m1,
            m2: 0,
            orbit_size: 1,
            kind: EntryKind::Primitive,
            cycle_type: vec![2; c],
        }
    }

    fn genus_one_catalogue() -> Vec<CatalogueEntry> {
        vec![
            entry("(1,3)(2,4)", 4, 2, 2, 4),
            entry("(1,4)(2,5)(3,6)", 6, 3, 3, 6),
        ]
    }

    #[test]
    fn average_contributions() {
        let r = avg_contribution(&genus_one_catalogue()[0]).unwrap();
        let expect = RationalFn::new(
            BivariatePoly::from_terms(&[(1, 4, 2)]),
            one_minus_q().pow(3),
        );
        assert_eq!(r, expect.unwrap());
        let mut bad = genus_one_catalogue()[0].clone();
        bad.m1 = 3;
        assert!(matches!(
            avg_contribution(&bad),
            Err(Error::InconsistentEntry(_))
        ));
    }

    #[test]
    fn genus_one_reduced_gf() {
        let r = reduced_gf(&genus_one_catalogue(), 1).unwrap();
        assert_eq!(r, genus_one_reduced());
        let terms = term_decompose(&r);
        assert_eq!(terms.len(), 1);
        assert_eq!((terms[0].i1, terms[0].i2, terms[0].i3), (4, 2, 4));
        assert!(term_decompose(&ReducedGF::zero(1)).is_empty());
        assert_eq!(reduced_gf(&[], 3).unwrap(), ReducedGF::zero(3));
    }

    #[test]
    fn genus_one_full() {
        let f = full_gf(&genus_one_reduced());
        assert_eq!(f.form.to_compact_string(), "x^4*y^2 * Delta^-5");
        assert_eq!(count_from_full(&f, 4, 2).unwrap(), BigUint::from(1u8));
        for n in 0..=12i64 {
            for k in 0..=n {
                let expect = gessel_gamma(2, n - 4, k - 2);
                assert_eq!(
                    BigRational::from_integer(
                        count_from_full(&f, n as usize, k as usize).unwrap().into()
                    ),
                    expect
                );
            }
        }
    }

    #[test]
    fn term_cases_match_substitution() {
        // x^i1 y^i2 / (1 - X²y)^i3 · Δ⁻¹ with X = (-u - Δ)/(2xy)
        let two_xy = DeltaElement::poly(BivariatePoly::from_terms(&[(2, 1, 1)]));
        let big_x = (&(-&DeltaElement::poly(u_poly())) - &DeltaElement::delta())
            .div(&two_xy)
            .unwrap();
        let y = DeltaElement::poly(BivariatePoly::y());
        let one = DeltaElement::one();
        for (i1, i2, i3) in [
            (4, 2, 4),
            (0, 0, 1),
            (2, 0, 1),
            (1, 1, 3),
            (6, 2, 10),
            (8, 4, 2),
        ] {
            let w = &one - &(&(&big_x * &big_x) * &y);
            let expect = (&big_x.pow(i1).unwrap() * &y.pow(i2).unwrap())
                .div(&(&w.pow(i3).unwrap() * &DeltaElement::delta()))
                .unwrap();
            let got = term_to_full(i1, i2, i3 as u32);
            assert_eq!(got.to_delta_element().unwrap(), expect, "({i1},{i2},{i3})");
            assert_eq!(got.normalized().to_delta_element().unwrap(), expect);
        }
    }

    #[test]
    fn genus_two_full_form() {
        let f = full_gf(&genus_two_reduced());
        assert_eq!(f.form.terms().count(), 1);
        assert_eq!(f.form.coefficient(-11), genus_two_full_numerator());
        assert_eq!(genus_two_display().normalized(), f.form);
        assert_eq!(
            genus_two_display().to_delta_element().unwrap(),
            f.raw.to_delta_element().unwrap()
        );
    }

    #[test]
    fn genus_two_counts() {
        let f = full_gf(&genus_two_reduced());
        let cells = [
            (6, 2, 1u64),
            (7, 3, 21),
            (8, 4, 161),
            (10, 4, 15330),
            (11, 4, 75075),
            (11, 5, 121275),
            (12, 8, 22407),
            (12, 5, 729960),
        ];
        for (n, k, v) in cells {
            assert_eq!(
                count_from_full(&f, n, k).unwrap(),
                BigUint::from(v),
                "({n},{k})"
            );
        }
        let s = series_of(&f, 12).unwrap();
        for (n, k, c) in count_table(&f, 12).unwrap() {
            assert_eq!(
                s.coeff(n as i32, k as i32),
                BigRational::from_integer(c.into())
            );
        }
    }

    #[test]
    fn genus_zero_path() {
        let f = genus_zero_full();
        assert_eq!(count_from_full(&f, 6, 3).unwrap(), BigUint::from(50u8));
        assert_eq!(series_of(&f.form, 8).unwrap(), d_series(8));
    }

    #[test]
    fn series_of_examples() {
        let f = LaurentDeltaForm::single(BivariatePoly::from_terms(&[(1, 4, 2)]), -5);
        let s = series_of(&f, 6).unwrap();
        assert_eq!(s.coeff(4, 2), rat(1));
        assert_eq!(s.coeff(6, 3), gessel_gamma(2, 2, 1));
        let geo = series_of(
            &RationalFn::new(BivariatePoly::one(), one_minus_q()).unwrap(),
            6,
        )
        .unwrap();
        assert_eq!(geo.coeff(6, 3), rat(1));
        assert_eq!(geo.coeff(5, 2), rat(0));
    }

    #[test]
    fn red2_agrees() {
        assert!(verify_red2(&genus_one_reduced(), 10).unwrap().is_equal());
        assert!(verify_red2(&ReducedGF::zero(1), 6).unwrap().is_equal());
    }

    #[test]
    fn matchings_specialization() {
        let rm = ReducedGF {
            numerator: BivariatePoly::from_terms(&[(21, 8, 4), (63, 10, 5), (21, 12, 6)]),
            power: 10,
            genus: 2,
        };
        let s = catalan_specialization(&rm, 10).unwrap();
        let expect = [21i64, 483, 6468, 66066, 570570, 4390386, 31039008];
        for (i, v) in expect.iter().enumerate() {
            assert_eq!(s.coeff(4 + i as i32, 0), rat(*v));
        }
    }
}
