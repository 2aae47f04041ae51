use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

fn rising(u: &BigRational, m: i64) -> BigRational {
    (0..m).fold(BigRational::one(), |acc, i| {
        acc * (u + BigRational::from_integer(BigInt::from(i)))
    })
}

fn factorial(m: i64) -> BigRational {
    BigRational::from_integer((1..=m).map(BigInt::from).product())
}

/// Coefficient of `x^n y^k` in `Δ^{-(2m+1)}`:
/// `C(n+2m, m) C(n+m, k) C(n+m, n-k) / C(2m, m)`.
pub fn gessel_gamma(m: u32, n: i64, k: i64) -> BigRational {
    if n < 0 || k < 0 || k > n {
        return BigRational::zero();
    }
    let m = m as i64;
    BigRational::new(
        binom(n + 2 * m, m) * binom(n + m, k) * binom(n + m, n - k),
        binom(2 * m, m),
    )
}

/// Coefficient of `x^n y^k` in `(Δ²)^{-α}`, by the rising-factorial formula.
pub fn gessel_general(alpha: &BigRational, n: i64, k: i64) -> BigRational {
    if n < 0 || k < 0 || k > n {
        return BigRational::zero();
    }
    let half = BigRational::new(1.into(), 2.into());
    let ah = alpha + &half;
    let two_a = alpha * BigRational::from_integer(2.into());
    rising(&ah, n) * rising(&two_a, n)
        / (factorial(n - k) * factorial(k) * rising(&ah, n - k) * rising(&ah, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{delta_squared, ratio};
    use crate::algebra::series::TruncatedSeries;

    #[test]
    fn examples() {
        assert_eq!(gessel_gamma(5, 0, 0), ratio(1, 1));
        assert_eq!(gessel_gamma(2, 1, 0), ratio(5, 1));
        assert_eq!(gessel_gamma(2, 1, 2), ratio(0, 1));
        assert_eq!(gessel_general(&ratio(1, 1), 0, 0), ratio(1, 1));
        assert_eq!(gessel_general(&ratio(5, 2), 1, 0), ratio(5, 1));
        let d2 = TruncatedSeries::new(&delta_squared(), 4);
        let s = d2.pow_rational(&ratio(-11, 2)).unwrap();
        assert_eq!(gessel_general(&ratio(11, 2), 2, 1), s.coeff(2, 1));
    }

    #[test]
    fn integer_alpha_matches_series() {
        let d2 = TruncatedSeries::new(&delta_squared(), 8);
        for a in 1..=3 {
            let s = d2.pow_rational(&ratio(-a, 1)).unwrap();
            for n in 0..=8 {
                for k in 0..=n {
                    assert_eq!(
                        gessel_general(&ratio(a, 1), n as i64, k as i64),
                        s.coeff(n, k)
                    );
                }
            }
        }
    }
}
