use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::poly::{delta_squared, rat, BivariatePoly};
use super::rational::RationalFn;
use super::series::TruncatedSeries;
use crate::error::{Error, Result};

/// `a + b·Δ` with `Δ² = 1 - 2x(1+y) + x²(1-y)²`.
#[derive(Clone, PartialEq, Eq)]
pub struct DeltaElement {
    pub a: RationalFn,
    pub b: RationalFn,
}

impl DeltaElement {
    pub fn new(a: RationalFn, b: RationalFn) -> Self {
        DeltaElement { a, b }
    }

    pub fn rational(a: RationalFn) -> Self {
        DeltaElement {
            a,
            b: RationalFn::zero(),
        }
    }

    pub fn poly(p: BivariatePoly) -> Self {
        Self::rational(p.into())
    }

    pub fn delta() -> Self {
        DeltaElement {
            a: RationalFn::zero(),
            b: RationalFn::one(),
        }
    }

    pub fn zero() -> Self {
        Self::rational(RationalFn::zero())
    }

    pub fn one() -> Self {
        Self::rational(RationalFn::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a - b·Δ`.
    pub fn conjugate(&self) -> Self {
        DeltaElement {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² - b²·Δ²`.
    pub fn norm(&self) -> RationalFn {
        let d2 = RationalFn::from_poly(delta_squared());
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &d2)
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = n.recip()?;
        let c = self.conjugate();
        Ok(DeltaElement {
            a: &c.a * &inv,
            b: &c.b * &inv,
        })
    }

    pub fn div(&self, rhs: &DeltaElement) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Partial derivative in `x`, using `Δ' = (Δ²)'/(2Δ²) · Δ`.
    pub fn dx(&self) -> Self {
        let d2 = delta_squared();
        let ratio = RationalFn::new(d2.dx(), d2.scale(&rat(2))).expect("nonzero");
        DeltaElement {
            a: self.a.dx(),
            b: &self.b.dx() + &(&self.b * &ratio),
        }
    }

    /// Series expansion, with `Δ` expanded as the square root with constant term 1.
    pub fn series(&self, order: i32) -> Result<TruncatedSeries> {
        let pad = order + 8;
        let delta =
            TruncatedSeries::new(&delta_squared(), pad).pow_rational(&super::poly::ratio(1, 2))?;
        let a = super::series::rational_series(&self.a, pad)?;
        let b = super::series::rational_series(&self.b, pad)?;
        Ok(a.add(&b.mul(&delta)).truncate(order))
    }
}

impl fmt::Display for DeltaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + [{}] * Delta", self.a, self.b)
    }
}

impl fmt::Debug for DeltaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &DeltaElement {
    type Output = DeltaElement;
    fn add(self, rhs: &DeltaElement) -> DeltaElement {
        DeltaElement {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &DeltaElement {
    type Output = DeltaElement;
    fn sub(self, rhs: &DeltaElement) -> DeltaElement {
        DeltaElement {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &DeltaElement {
    type Output = DeltaElement;
    fn neg(self) -> DeltaElement {
        DeltaElement {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Mul for &DeltaElement {
    type Output = DeltaElement;
    fn mul(self, rhs: &DeltaElement) -> DeltaElement {
        let d2 = RationalFn::from_poly(delta_squared());
        DeltaElement {
            a: &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &d2),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

/// `Σ L_e(x, y) · Δ^e`: Laurent polynomials times integer powers of `Δ`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LaurentDeltaForm {
    terms: BTreeMap<i32, BivariatePoly>,
}

impl LaurentDeltaForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(p: BivariatePoly, exponent: i32) -> Self {
        let mut f = Self::zero();
        f.add_term(exponent, &p);
        f
    }

    pub fn add_term(&mut self, exponent: i32, p: &BivariatePoly) {
        let entry = self.terms.entry(exponent).or_default();
        *entry += p;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn add_form(&mut self, other: &LaurentDeltaForm) {
        for (&e, p) in &other.terms {
            self.add_term(e, p);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        LaurentDeltaForm {
            terms: self
                .terms
                .iter()
                .map(|(&e, p)| (e, p.scale(c)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    /// Multiplies every coefficient by `x^i y^j`.
    pub fn shift(&self, i: i32, j: i32) -> Self {
        LaurentDeltaForm {
            terms: self
                .terms
                .iter()
                .map(|(&e, p)| (e, p.shift(i, j)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentDeltaForm) -> Self {
        let mut out = Self::zero();
        for (&e, p) in &self.terms {
            for (&f, q) in &other.terms {
                out.add_term(e + f, &(p * q));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BivariatePoly)> {
        self.terms.iter().map(|(&e, p)| (e, p))
    }

    pub fn coefficient(&self, exponent: i32) -> BivariatePoly {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Collects every power of `Δ` onto the smallest power of the same
    /// parity, using `Δ² ` as a polynomial; odd powers end at most at `-1`
    /// and even powers at most at `0`.
    pub fn normalized(&self) -> Self {
        let d2 = delta_squared();
        let mut out = Self::zero();
        for parity in [0, 1] {
            let mut exps: Vec<i32> = self
                .terms
                .keys()
                .copied()
                .filter(|e| e.rem_euclid(2) == parity)
                .collect();
            if exps.is_empty() {
                continue;
            }
            exps.sort_unstable();
            let cap = if parity == 1 { -1 } else { 0 };
            let target = exps[0].min(cap);
            for e in exps {
                let k = ((e - target) / 2) as u32;
                out.add_term(target, &(&self.terms[&e] * &d2.pow(k)));
            }
        }
        out
    }

    /// The equivalent `a + bΔ`.
    pub fn to_delta_element(&self) -> Result<DeltaElement> {
        let d2 = RationalFn::from_poly(delta_squared());
        let mut out = DeltaElement::zero();
        for (&e, p) in &self.terms {
            let lp = RationalFn::from_poly(p.clone());
            let piece = if e.rem_euclid(2) == 0 {
                DeltaElement::rational(&lp * &d2.pow(e / 2)?)
            } else {
                DeltaElement::new(RationalFn::zero(), &lp * &d2.pow((e - 1) / 2)?)
            };
            out = &out + &piece;
        }
        Ok(out)
    }

    /// Text form `x^4*y^2 * Delta^-5 + …`, one summand per power.
    pub fn to_compact_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&e, p)| {
                let body = if p.len() == 1 {
                    p.to_compact_string()
                } else {
                    format!("({})", p.to_compact_string())
                };
                if e == 0 {
                    body
                } else {
                    format!("{body} * Delta^{e}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for LaurentDeltaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

impl fmt::Debug for LaurentDeltaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{ratio, u_poly};

    fn p(t: &[(i64, i32, i32)]) -> BivariatePoly {
        BivariatePoly::from_terms(t)
    }

    #[test]
    fn norm_identity() {
        let a = RationalFn::from_poly(p(&[(1, 0, 0), (2, 1, 1)]));
        let b = RationalFn::from_poly(p(&[(3, 1, 0)]));
        let e = DeltaElement::new(a.clone(), b.clone());
        let prod = &e * &e.conjugate();
        assert!(prod.b.is_zero());
        assert_eq!(prod.a, e.norm());
        assert_eq!(&e * &e.recip().unwrap(), DeltaElement::one());
    }

    #[test]
    fn delta_squared_is_polynomial() {
        let d = DeltaElement::delta();
        assert_eq!(&d * &d, DeltaElement::poly(delta_squared()));
    }

    #[test]
    fn normalization() {
        let mut f = LaurentDeltaForm::zero();
        f.add_term(-9, &p(&[(1, 0, 0)]));
        f.add_term(-11, &p(&[(2, 1, 0)]));
        let n = f.normalized();
        assert_eq!(n.terms().count(), 1);
        assert_eq!(n.coefficient(-11), &delta_squared() + &p(&[(2, 1, 0)]));
        assert_eq!(n.to_delta_element().unwrap(), f.to_delta_element().unwrap());
        let g = LaurentDeltaForm::single(p(&[(1, 0, 0)]), 1).normalized();
        assert_eq!(g.coefficient(-1), delta_squared());
    }

    #[test]
    fn display() {
        let f = LaurentDeltaForm::single(p(&[(1, 4, 2)]), -5);
        assert_eq!(f.to_string(), "x^4*y^2 * Delta^-5");
    }

    #[test]
    fn derivative_and_series() {
        // d/dx Δ = (Δ²)'/(2Δ)
        let d = DeltaElement::delta().dx();
        let expected = DeltaElement::new(
            RationalFn::zero(),
            RationalFn::new(delta_squared().dx(), delta_squared().scale(&rat(2))).unwrap(),
        );
        assert_eq!(d, expected);
        let s = DeltaElement::delta().series(6).unwrap();
        let direct = crate::algebra::series::TruncatedSeries::new(&delta_squared(), 6)
            .pow_rational(&ratio(1, 2))
            .unwrap();
        assert_eq!(s, direct);
        let u = DeltaElement::poly(u_poly());
        assert_eq!(u.series(4).unwrap().coeff(0, 0), rat(-1));
    }
}
