use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
pub type Exp = (i32, i32);

/// Sparse polynomial in `x` and `y` with exact rational coefficients.
/// Negative exponents are allowed (Laurent polynomials); zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<Exp, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigRational, i: i32, j: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// Builds a polynomial from integer-coefficient terms `(c, i, j)`.
    pub fn from_terms(terms: &[(i64, i32, i32)]) -> Self {
        let mut p = Self::zero();
        for &(c, i, j) in terms {
            p.add_term((i, j), rat(c));
        }
        p
    }

    pub fn add_term(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    pub fn coeff(&self, i: i32, j: i32) -> BigRational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest `x` and `y` exponents, or `None` for zero.
    pub fn min_exponents(&self) -> Option<Exp> {
        let mi = self.terms.keys().map(|e| e.0).min()?;
        let mj = self.terms.keys().map(|e| e.1).min()?;
        Some((mi, mj))
    }

    pub fn max_x_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn min_x_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.0).min()
    }

    /// True when all exponents are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i >= 0 && j >= 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiplies by `x^i y^j`.
    pub fn shift(&self, i: i32, j: i32) -> Self {
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to `x`.
    pub fn dx(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i != 0 {
                out.add_term((i - 1, j), c * rat(i as i64));
            }
        }
        out
    }

    /// Partial derivative with respect to `y`.
    pub fn dy(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j != 0 {
                out.add_term((i, j - 1), c * rat(j as i64));
            }
        }
        out
    }

    /// Replaces `x` by `a x^p y^q` and `y` by `b x^r y^s`.
    pub fn substitute_monomials(
        &self,
        (a, p, q): (&BigRational, i32, i32),
        (b, r, s): (&BigRational, i32, i32),
    ) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            let coef = c * pow_rat(a, i) * pow_rat(b, j);
            out.add_term((p * i + r * j, q * i + s * j), coef);
        }
        out
    }

    /// Least common multiple of the coefficient denominators divided by the
    /// gcd of the numerators, with the sign of the first term.
    pub fn content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        let sign = match self.terms.values().next() {
            Some(c) if c.is_negative() => -BigInt::one(),
            _ => BigInt::one(),
        };
        BigRational::new(num_gcd * sign, den_lcm)
    }

    /// Leading term under the ordering by `x` degree, then `y` degree.
    fn leading(&self) -> Option<(&Exp, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d` when `d` divides `self` as polynomials.
    pub fn div_exact(&self, d: &BivariatePoly) -> Option<BivariatePoly> {
        if d.is_zero() || !self.is_polynomial() || !d.is_polynomial() {
            return None;
        }
        let (&(di, dj), dc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&(ri, rj), rc)) = rem.leading() {
            let (qi, qj) = (ri - di, rj - dj);
            if qi < 0 || qj < 0 {
                return None;
            }
            let qc = rc / dc;
            let term = Self::monomial(qc.clone(), qi, qj);
            rem -= &(&term * d);
            quot.add_term((qi, qj), qc);
        }
        Some(quot)
    }

    /// Evaluates `y` at a rational and `x` at a rational.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * pow_rat(x, i) * pow_rat(y, j))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Coefficients of `x^i` as polynomials in `y`, keyed by `i`.
    pub fn x_slices(&self) -> BTreeMap<i32, BivariatePoly> {
        let mut out: BTreeMap<i32, BivariatePoly> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            out.entry(i).or_default().add_term((0, j), c.clone());
        }
        out
    }

    /// Text form used by the CLI: `x^4*y^2 - 3/2*x*y^3`, terms ascending.
    pub fn to_compact_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(abs.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("y".into()),
                _ => factors.push(format!("y^{j}")),
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

pub(crate) fn pow_rat(a: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(a.clone(), e as usize)
    } else {
        num_traits::pow(a.recip(), (-e) as usize)
    }
}

impl fmt::Display for BivariatePoly {
    /// Monomial list `c * x^i * y^j`, ascending in `(i, j)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| format!("{c} * x^{i} * y^{j}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

impl AddAssign<&BivariatePoly> for BivariatePoly {
    fn add_assign(&mut self, rhs: &BivariatePoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&BivariatePoly> for BivariatePoly {
    fn sub_assign(&mut self, rhs: &BivariatePoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(p, q), d) in &rhs.terms {
                out.add_term((a + p, b + q), c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BivariatePoly {
            type Output = BivariatePoly;
            fn $m(self, rhs: BivariatePoly) -> BivariatePoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        -&self
    }
}

/// `1 - x²y`.
pub fn one_minus_q() -> BivariatePoly {
    BivariatePoly::from_terms(&[(1, 0, 0), (-1, 2, 1)])
}

/// `Δ² = (x + xy - 1)² - 4x²y = 1 - 2x(1+y) + x²(1-y)²`.
pub fn delta_squared() -> BivariatePoly {
    BivariatePoly::from_terms(&[
        (1, 0, 0),
        (-2, 1, 0),
        (-2, 1, 1),
        (1, 2, 0),
        (-2, 2, 1),
        (1, 2, 2),
    ])
}

/// `u = xy + x - 1`.
pub fn u_poly() -> BivariatePoly {
    BivariatePoly::from_terms(&[(1, 1, 1), (1, 1, 0), (-1, 0, 0)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_examples() {
        let q = one_minus_q();
        assert_eq!(
            q.pow(2),
            BivariatePoly::from_terms(&[(1, 0, 0), (-2, 2, 1), (1, 4, 2)])
        );
        let u = u_poly();
        let four_x2y = BivariatePoly::from_terms(&[(4, 2, 1)]);
        assert_eq!(&u.pow(2) - &four_x2y, delta_squared());
        assert_eq!(
            delta_squared(),
            BivariatePoly::from_terms(&[
                (1, 2, 0),
                (-2, 2, 1),
                (-2, 1, 0),
                (1, 2, 2),
                (-2, 1, 1),
                (1, 0, 0)
            ])
        );
    }

    #[test]
    fn exact_division() {
        let a = BivariatePoly::from_terms(&[(1, 0, 0), (3, 1, 2), (-1, 2, 1)]);
        let b = delta_squared();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(
            BivariatePoly::zero().div_exact(&b),
            Some(BivariatePoly::zero())
        );
    }

    #[test]
    fn display_formats() {
        let p = BivariatePoly::from_terms(&[(1, 4, 2), (-3, 0, 0)]);
        assert_eq!(p.to_string(), "-3 * x^0 * y^0 + 1 * x^4 * y^2");
        assert_eq!(p.to_compact_string(), "-3 + x^4*y^2");
        let h = BivariatePoly::monomial(ratio(1, 2), 1, 1);
        assert_eq!(h.to_compact_string(), "1/2*x*y");
    }

    #[test]
    fn derivatives_and_substitution() {
        let p = BivariatePoly::from_terms(&[(3, 2, 1), (1, 0, 5)]);
        assert_eq!(p.dx(), BivariatePoly::from_terms(&[(6, 1, 1)]));
        assert_eq!(p.dy(), BivariatePoly::from_terms(&[(3, 2, 0), (5, 0, 4)]));
        let one = rat(1);
        let s = p.substitute_monomials((&one, 1, 1), (&one, 0, 1));
        assert_eq!(s, BivariatePoly::from_terms(&[(3, 2, 3), (1, 0, 5)]));
        assert_eq!(p.eval(&rat(2), &rat(1)), rat(13));
    }
}
