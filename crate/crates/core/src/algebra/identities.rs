//! The noncrossing generating function `D(x,y)`, Catalan series, and the
//! identities linking `D` to `Δ`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::delta::DeltaElement;
use super::poly::{delta_squared, rat, ratio, u_poly, BivariatePoly};
use super::rational::RationalFn;
use super::series::{y_series, TruncatedSeries};
use crate::enumerate::narayana;
use crate::error::Result;

/// `D(x,y) = 1 + Σ N(n,k) x^n y^k` up to `x^order`.
pub fn d_series(order: i32) -> TruncatedSeries {
    let mut p = BivariatePoly::one();
    for n in 1..=order.max(0) as usize {
        for k in 1..=n {
            let c = BigRational::from_integer(BigInt::from(narayana(n, k)));
            p.add_term((n as i32, k as i32), c);
        }
    }
    TruncatedSeries::new(&p, order)
}

/// `C(t) = Σ Cat(n) t^n` up to `t^order`, in the series variable.
pub fn catalan_series(order: i32) -> TruncatedSeries {
    let mut p = BivariatePoly::zero();
    let mut cat = BigInt::from(1);
    for n in 0..=order.max(0) as i64 {
        p.add_term((n as i32, 0), BigRational::from_integer(cat.clone()));
        cat = cat * BigInt::from(2 * (2 * n + 1)) / BigInt::from(n + 2);
    }
    TruncatedSeries::new(&p, order)
}

/// `D = (1 + x - xy - Δ) / (2x)` as an element of the extension.
pub fn d_exact() -> DeltaElement {
    let num = BivariatePoly::from_terms(&[(1, 0, 0), (1, 1, 0), (-1, 1, 1)]);
    let inv2x = RationalFn::new(
        BivariatePoly::one(),
        BivariatePoly::from_terms(&[(2, 1, 0)]),
    )
    .expect("nonzero");
    DeltaElement::new(&RationalFn::from_poly(num) * &inv2x, -&inv2x)
}

/// `Δ` as a series with constant term 1.
pub fn delta_series(order: i32) -> TruncatedSeries {
    TruncatedSeries::new(&delta_squared(), order)
        .pow_rational(&ratio(1, 2))
        .expect("constant term 1")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub exact: bool,
    pub series: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub order: i32,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.exact && c.series)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !(c.exact && c.series))
            .map(|c| c.name)
            .collect()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{}: exact {} series {}",
                c.name,
                if c.exact { "ok" } else { "FAIL" },
                if c.series { "ok" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Checks the identities between `D`, `Δ` and `u = xy + x - 1`, exactly in
/// the quadratic extension and as series to `x^order`.
pub fn delta_identities(order: i32) -> Result<IdentityReport> {
    let pad = order + 6;
    let one = DeltaElement::one();
    let x = DeltaElement::poly(BivariatePoly::x());
    let y = DeltaElement::poly(BivariatePoly::y());
    let u = DeltaElement::poly(u_poly());
    let delta = DeltaElement::delta();
    let half = DeltaElement::rational(RationalFn::constant(ratio(1, 2)));
    let d = d_exact();
    let dm1_over_y = (&d - &one).div(&y)?;
    let w = &one - &(&(&d - &one) * &(&d - &one)).div(&y)?;

    let sx = TruncatedSeries::new(&BivariatePoly::x(), pad);
    let sy = y_series(pad);
    let s1 = TruncatedSeries::one(pad);
    let su = TruncatedSeries::new(&u_poly(), pad);
    let sdelta = delta_series(pad);
    let sd = d_series(pad);
    let sdm1_over_y = sd.sub(&s1).div(&sy)?;
    let sw = s1.sub(&sd.sub(&s1).mul(&sd.sub(&s1)).div(&sy)?);
    let same = |a: &TruncatedSeries, b: &TruncatedSeries| a.truncate(order) == b.truncate(order);

    let mut checks = Vec::new();

    // 1/(1 - (D-1)²/y) = (1 - uΔ⁻¹)/2
    let lhs = w.recip()?;
    let rhs = &(&one - &u.div(&delta)?) * &half;
    let slhs = sw.inverse()?;
    let srhs = s1.sub(&su.div(&sdelta)?).scale(&ratio(1, 2));
    checks.push(IdentityCheck {
        name: "1/(1-(D-1)^2/y) = (1-u/Delta)/2",
        exact: lhs == rhs,
        series: same(&slhs, &srhs),
    });

    // (D-1)/y = (-u - Δ)/(2xy)
    let two_xy = DeltaElement::poly(BivariatePoly::from_terms(&[(2, 1, 1)]));
    let rhs = (&(-&u) - &delta).div(&two_xy)?;
    let srhs = su.neg().sub(&sdelta).div(&TruncatedSeries::new(
        &BivariatePoly::from_terms(&[(2, 1, 1)]),
        pad,
    ))?;
    checks.push(IdentityCheck {
        name: "(D-1)/y = (-u-Delta)/(2xy)",
        exact: dm1_over_y == rhs,
        series: same(&sdm1_over_y, &srhs),
    });

    // ((D-1)/y) / (1 - (D-1)²/y) = x/Δ
    let lhs = dm1_over_y.div(&w)?;
    let rhs = x.div(&delta)?;
    let slhs = sdm1_over_y.div(&sw)?;
    let srhs = sx.div(&sdelta)?;
    checks.push(IdentityCheck {
        name: "((D-1)/y)/(1-(D-1)^2/y) = x/Delta",
        exact: lhs == rhs,
        series: same(&slhs, &srhs),
    });

    // 1 + x - xy - 2xD = Δ
    let base = DeltaElement::poly(BivariatePoly::from_terms(&[
        (1, 0, 0),
        (1, 1, 0),
        (-1, 1, 1),
    ]));
    let two_x = DeltaElement::poly(BivariatePoly::from_terms(&[(2, 1, 0)]));
    let lhs = &base - &(&two_x * &d);
    let sbase = TruncatedSeries::new(
        &BivariatePoly::from_terms(&[(1, 0, 0), (1, 1, 0), (-1, 1, 1)]),
        pad,
    );
    let slhs = sbase.sub(&sd.mul(&sx).scale(&rat(2)));
    checks.push(IdentityCheck {
        name: "1+x-xy-2xD = Delta",
        exact: lhs == delta,
        series: same(&slhs, &sdelta),
    });

    // x D² + (xy - 1 - x) D + 1 = 0
    let lin = DeltaElement::poly(BivariatePoly::from_terms(&[
        (1, 1, 1),
        (-1, 0, 0),
        (-1, 1, 0),
    ]));
    let quad = &(&(&x * &d) * &d) + &(&(&lin * &d) + &one);
    let slin = TruncatedSeries::new(
        &BivariatePoly::from_terms(&[(1, 1, 1), (-1, 0, 0), (-1, 1, 0)]),
        pad,
    );
    let squad = sx.mul(&sd).mul(&sd).add(&slin.mul(&sd)).add(&s1);
    checks.push(IdentityCheck {
        name: "xD^2+(xy-1-x)D+1 = 0",
        exact: quad.is_zero(),
        series: squad.truncate(order).is_zero(),
    });

    // x D (D + y - 1) = D - 1
    let lhs = &(&x * &d) * &(&(&d + &y) - &one);
    let slhs = sx.mul(&sd).mul(&sd.add(&sy).sub(&s1));
    checks.push(IdentityCheck {
        name: "xD(D+y-1) = D-1",
        exact: lhs == &d - &one,
        series: same(&slhs, &sd.sub(&s1)),
    });

    // D_x = D(D+y-1)/(1+x-xy-2xD)
    let dx = d.dx();
    let rhs = (&d * &(&(&d + &y) - &one)).div(&delta)?;
    let sdx = sd.dx();
    let srhs = sd.mul(&sd.add(&sy).sub(&s1)).div(&sdelta)?;
    let ord = order - 1;
    checks.push(IdentityCheck {
        name: "D_x = D(D+y-1)/(1+x-xy-2xD)",
        exact: dx == rhs,
        series: sdx.truncate(ord) == srhs.truncate(ord),
    });

    // 1 + x D_x/D + x D_x/(D+y-1) = 1/Δ
    let lhs = &(&one + &(&x * &dx).div(&d)?) + &(&x * &dx).div(&(&(&d + &y) - &one))?;
    let rhs = delta.recip()?;
    let sxdx = sx.mul(&sdx);
    let slhs = s1
        .add(&sxdx.div(&sd)?)
        .add(&sxdx.div(&sd.add(&sy).sub(&s1))?);
    let srhs = sdelta.inverse()?;
    checks.push(IdentityCheck {
        name: "1+xD_x/D+xD_x/(D+y-1) = 1/Delta",
        exact: lhs == rhs,
        series: same(&slhs, &srhs),
    });

    Ok(IdentityReport { order, checks })
}
