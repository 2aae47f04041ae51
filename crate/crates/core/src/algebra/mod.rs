//! Exact polynomials, rational functions, the quadratic extension by `Δ`,
//! truncated series and coefficient extraction.

mod delta;
mod gessel;
mod identities;
mod poly;
mod rational;
mod series;

pub use delta::{DeltaElement, LaurentDeltaForm};
pub use gessel::{gessel_gamma, gessel_general};
pub use identities::{
    catalan_series, d_exact, d_series, delta_identities, delta_series, IdentityCheck,
    IdentityReport,
};
pub use poly::{delta_squared, one_minus_q, rat, ratio, u_poly, BivariatePoly, Exp};
pub use rational::RationalFn;
pub use series::{rational_series, x_series, y_series, TruncatedSeries};
