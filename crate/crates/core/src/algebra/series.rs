use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{rat, BivariatePoly};
use super::rational::RationalFn;
use crate::error::{Error, Result};

/// A power series in `x` with Laurent-polynomial-in-`y` coefficients, known
/// exactly up to and including `x^order`.
///
/// The `x`-valuation may be negative.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: BivariatePoly,
    order: i32,
}

impl TruncatedSeries {
    pub fn new(p: &BivariatePoly, order: i32) -> Self {
        let mut poly = BivariatePoly::zero();
        for (&(i, j), c) in p.terms() {
            if i <= order {
                poly.add_term((i, j), c.clone());
            }
        }
        TruncatedSeries { poly, order }
    }

    pub fn zero(order: i32) -> Self {
        Self::new(&BivariatePoly::zero(), order)
    }

    pub fn one(order: i32) -> Self {
        Self::new(&BivariatePoly::one(), order)
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    pub fn as_poly(&self) -> &BivariatePoly {
        &self.poly
    }

    pub fn coeff(&self, n: i32, k: i32) -> BigRational {
        self.poly.coeff(n, k)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Lowest `x` exponent present; `order + 1` for the zero series.
    pub fn valuation(&self) -> i32 {
        self.poly.min_x_degree().unwrap_or(self.order + 1)
    }

    pub fn truncate(&self, order: i32) -> Self {
        Self::new(&self.poly, order.min(self.order))
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> Self {
        Self::new(&(&self.poly + &rhs.poly), self.order.min(rhs.order))
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> Self {
        Self::new(&(&self.poly - &rhs.poly), self.order.min(rhs.order))
    }

    pub fn neg(&self) -> Self {
        Self::new(&-&self.poly, self.order)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.poly.scale(c), self.order)
    }

    /// Multiplies by the exact monomial `x^i y^j`.
    pub fn shift(&self, i: i32, j: i32) -> Self {
        Self::new(&self.poly.shift(i, j), self.order + i)
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> Self {
        let order = (self.order + rhs.valuation()).min(rhs.order + self.valuation());
        let mut out = BivariatePoly::zero();
        for (&(a, b), c) in self.poly.terms() {
            for (&(p, q), d) in rhs.poly.terms() {
                if a + p <= order {
                    out.add_term((a + p, b + q), c * d);
                }
            }
        }
        TruncatedSeries { poly: out, order }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(i32::MAX / 4);
        for _ in 0..k {
            result = result.mul(self);
        }
        if k == 0 {
            Self::one(self.order - self.valuation())
        } else {
            result
        }
    }

    /// Splits off the leading monomial `c y^j x^v`, returning it and the
    /// normalized coefficient slices of the remaining factor `1 + t`.
    fn normalized_slices(&self) -> Result<((BigRational, i32, i32), Vec<BivariatePoly>)> {
        let v = self.valuation();
        if self.is_zero() {
            return Err(Error::NotExpandable("zero series".into()));
        }
        let lead = self.poly.x_slices().remove(&v).expect("valuation slice");
        if !lead.is_monomial() {
            return Err(Error::NotExpandable(format!(
                "leading coefficient {} is not a monomial in y",
                lead.to_compact_string()
            )));
        }
        let (&(_, j), c) = lead.terms().next().expect("monomial");
        let c = c.clone();
        let h = self.poly.shift(-v, -j).scale(&c.recip());
        let m = self.order - v;
        let slices = h.x_slices();
        let hs = (0..=m)
            .map(|n| slices.get(&n).cloned().unwrap_or_default())
            .collect();
        Ok(((c, j, v), hs))
    }

    fn from_slices(slices: &[BivariatePoly], order: i32) -> Self {
        let mut poly = BivariatePoly::zero();
        for (n, s) in slices.iter().enumerate() {
            poly += &s.shift(n as i32, 0);
        }
        Self::new(&poly, order)
    }

    pub fn inverse(&self) -> Result<Self> {
        let ((c, j, v), h) = self.normalized_slices()?;
        let m = h.len();
        let mut g: Vec<BivariatePoly> = Vec::with_capacity(m);
        g.push(BivariatePoly::one());
        for n in 1..m {
            let mut acc = BivariatePoly::zero();
            for k in 1..=n {
                acc -= &(&h[k] * &g[n - k]);
            }
            g.push(acc);
        }
        let base = Self::from_slices(&g, m as i32 - 1);
        Ok(Self::new(
            &base.poly.shift(-v, -j).scale(&c.recip()),
            m as i32 - 1 - v,
        ))
    }

    pub fn div(&self, rhs: &TruncatedSeries) -> Result<Self> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// `self^alpha` for a series whose constant term is exactly 1.
    pub fn pow_rational(&self, alpha: &BigRational) -> Result<Self> {
        let ((c, j, v), h) = self.normalized_slices()?;
        if v != 0 || j != 0 || !c.is_one() {
            return Err(Error::NotExpandable(
                "rational power needs constant term 1".into(),
            ));
        }
        let m = h.len();
        let mut g: Vec<BivariatePoly> = Vec::with_capacity(m);
        g.push(BivariatePoly::one());
        let a1 = alpha + BigRational::one();
        for n in 1..m {
            let mut acc = BivariatePoly::zero();
            for k in 1..=n {
                let w = &a1 * rat(k as i64) - rat(n as i64);
                if !w.is_zero() && !h[k].is_zero() {
                    acc += &(&h[k] * &g[n - k]).scale(&w);
                }
            }
            g.push(acc.scale(&BigRational::new(1.into(), (n as i64).into())));
        }
        Ok(Self::from_slices(&g, m as i32 - 1))
    }

    /// Derivative with respect to `x`.
    pub fn dx(&self) -> Self {
        Self::new(&self.poly.dx(), self.order - 1)
    }

    /// Human-readable form with an `O(x^{N+1})` tail.
    pub fn to_compact_string(&self) -> String {
        format!(
            "{} + O(x^{})",
            self.poly.to_compact_string(),
            self.order + 1
        )
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(x^{})", self.poly, self.order + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

impl BivariatePoly {
    /// Substitutes series for `x` and `y`.
    pub fn eval_series(
        &self,
        xs: &TruncatedSeries,
        ys: &TruncatedSeries,
    ) -> Result<TruncatedSeries> {
        let mut total: Option<TruncatedSeries> = None;
        let mut x_cache: std::collections::BTreeMap<i32, TruncatedSeries> = Default::default();
        let mut y_cache: std::collections::BTreeMap<i32, TruncatedSeries> = Default::default();
        let power = |s: &TruncatedSeries,
                     cache: &mut std::collections::BTreeMap<i32, TruncatedSeries>,
                     e: i32|
         -> Result<TruncatedSeries> {
            if let Some(p) = cache.get(&e) {
                return Ok(p.clone());
            }
            let base = if e >= 0 { s.clone() } else { s.inverse()? };
            let p = base.pow(e.unsigned_abs());
            cache.insert(e, p.clone());
            Ok(p)
        };
        for (&(i, j), c) in self.terms() {
            let xi = power(xs, &mut x_cache, i)?;
            let yj = power(ys, &mut y_cache, j)?;
            let term = xi.mul(&yj).scale(c);
            total = Some(match total {
                None => term,
                Some(t) => t.add(&term),
            });
        }
        Ok(total.unwrap_or_else(|| TruncatedSeries::zero(xs.order().min(ys.order()))))
    }
}

/// Series of a rational function in `x` (with `y` kept symbolic).
pub fn rational_series(f: &RationalFn, order: i32) -> Result<TruncatedSeries> {
    let num = TruncatedSeries::new(
        f.numer(),
        order + 2 * f.denom().max_x_degree().unwrap_or(0) + 2,
    );
    let den = TruncatedSeries::new(
        f.denom(),
        order + 2 * f.denom().max_x_degree().unwrap_or(0) + 2,
    );
    Ok(num.div(&den)?.truncate(order))
}

/// The series variable `x` to the given order.
pub fn x_series(order: i32) -> TruncatedSeries {
    TruncatedSeries::new(&BivariatePoly::x(), order)
}

/// The exact monomial `y`.
pub fn y_series(order: i32) -> TruncatedSeries {
    TruncatedSeries::new(&BivariatePoly::y(), order)
}
