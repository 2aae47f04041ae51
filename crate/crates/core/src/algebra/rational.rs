use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::poly::{delta_squared, one_minus_q, BivariatePoly};
use crate::error::{Error, Result};

/// Quotient of two bivariate polynomials.
///
/// Normalization cancels monomial factors, powers of `1 - x²y` and of `Δ²`,
/// and any exact polynomial divisibility between numerator and denominator;
/// the denominator is scaled to integer coefficients with content 1 and a
/// positive lowest term. No general gcd is computed, so equality is decided
/// by cross-multiplication.
#[derive(Clone)]
pub struct RationalFn {
    num: BivariatePoly,
    den: BivariatePoly,
}

impl RationalFn {
    pub fn new(num: BivariatePoly, den: BivariatePoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RationalFn { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: BivariatePoly) -> Self {
        let mut r = RationalFn {
            num: p,
            den: BivariatePoly::one(),
        };
        r.normalize();
        r
    }

    pub fn zero() -> Self {
        Self::from_poly(BivariatePoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BivariatePoly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(BivariatePoly::constant(c))
    }

    pub fn numer(&self) -> &BivariatePoly {
        &self.num
    }

    pub fn denom(&self) -> &BivariatePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial (possibly Laurent) when the denominator is a monomial.
    pub fn as_laurent(&self) -> Option<BivariatePoly> {
        if !self.den.is_monomial() {
            return None;
        }
        let (&(i, j), c) = self.den.terms().next()?;
        Some(self.num.shift(-i, -j).scale(&c.recip()))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = BivariatePoly::one();
            return;
        }
        // Monomial factors: make both sides polynomials with no common x^a y^b.
        let (ni, nj) = self.num.min_exponents().expect("nonzero");
        let (di, dj) = self.den.min_exponents().expect("nonzero");
        self.num = self.num.shift(-ni, -nj);
        self.den = self.den.shift(-di, -dj);
        let (si, sj) = (ni - di, nj - dj);
        self.num = self.num.shift(si.max(0), sj.max(0));
        self.den = self.den.shift((-si).max(0), (-sj).max(0));

        if let Some(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = BivariatePoly::one();
        } else {
            for factor in [one_minus_q(), delta_squared()] {
                while let (Some(a), Some(b)) =
                    (self.num.div_exact(&factor), self.den.div_exact(&factor))
                {
                    self.num = a;
                    self.den = b;
                }
            }
        }
        let scale = self.den.content().recip();
        self.num = self.num.scale(&scale);
        self.den = self.den.scale(&scale);
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RationalFn) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            RationalFn::new(self.num.pow(k as u32), self.den.pow(k as u32))
        } else {
            self.recip()?.pow(-k)
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut r = RationalFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        };
        r.normalize();
        r
    }

    /// Partial derivative with respect to `x`.
    pub fn dx(&self) -> Self {
        let num = &(&self.num.dx() * &self.den) - &(&self.num * &self.den.dx());
        RationalFn::new(num, self.den.pow(2)).expect("nonzero denominator")
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.to_compact_string())
        } else {
            write!(
                f,
                "({}) / ({})",
                self.num.to_compact_string(),
                self.den.to_compact_string()
            )
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl From<BivariatePoly> for RationalFn {
    fn from(p: BivariatePoly) -> Self {
        RationalFn::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat;

    fn p(t: &[(i64, i32, i32)]) -> BivariatePoly {
        BivariatePoly::from_terms(t)
    }

    #[test]
    fn normalization_cancels_known_factors() {
        let q = one_minus_q();
        let r = RationalFn::new(&p(&[(4, 4, 2)]) * &q, q.pow(4).scale(&rat(4))).unwrap();
        assert_eq!(r.numer(), &p(&[(1, 4, 2)]));
        assert_eq!(r.denom(), &q.pow(3));
        let s = RationalFn::new(p(&[(2, 1, 0)]), p(&[(-4, 1, 1)])).unwrap();
        assert_eq!(
            s.numer(),
            &BivariatePoly::constant(crate::algebra::poly::ratio(-1, 2))
        );
        assert_eq!(s.denom(), &p(&[(1, 0, 1)]));
    }

    #[test]
    fn arithmetic() {
        let a = RationalFn::new(p(&[(1, 0, 0)]), one_minus_q()).unwrap();
        let b = RationalFn::new(p(&[(1, 2, 1)]), one_minus_q()).unwrap();
        assert_eq!(&a - &b, RationalFn::one());
        assert_eq!((&a * &b).div(&b).unwrap(), a);
        assert!(RationalFn::new(p(&[(1, 0, 0)]), BivariatePoly::zero()).is_err());
        assert!(RationalFn::zero().recip().is_err());
    }

    #[test]
    fn derivative() {
        // d/dx 1/(1-x) = 1/(1-x)^2
        let f = RationalFn::new(BivariatePoly::one(), p(&[(1, 0, 0), (-1, 1, 0)])).unwrap();
        let g = RationalFn::new(BivariatePoly::one(), p(&[(1, 0, 0), (-1, 1, 0)]).pow(2)).unwrap();
        assert_eq!(f.dx(), g);
    }
}
