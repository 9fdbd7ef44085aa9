//! Exact truncated multivariate series arithmetic.
//!
//! Provides:
//! - [`ExponentLattice`]: a named integer exponent lattice with a grading weight
//!   per basis element.
//! - [`QSeries`]: a finite map from exponent vectors to exact rationals,
//!   truncated by total grade.
//! - [`ChowElement`] / [`HbarLaurent`]: the 24-dimensional quotient ring
//!   Q[H1..H4]/(H1^3, H2^2, H3^2, H4^2) and finite Laurent polynomials in hbar
//!   over it.
//! - [`exp_bound_certify`] and [`SupCertificate`]: exponential coefficient
//!   bounds `|a_v| <= c * r^diag(v)` and their closure under products,
//!   exponentials, inverses and unit substitutions.
//!
//! All coefficients are arbitrary-precision rationals; there is no floating
//! point in this crate.

mod bound;
mod chow;
mod hbar;
mod jsonio;
mod lattice;
mod series;

pub use bound::{certify_series, exp_bound_certify, BoundReport, SupCertificate};
pub use chow::ChowElement;
pub use hbar::HbarLaurent;
pub use jsonio::{series_from_json, series_to_json};
pub use lattice::ExponentLattice;
pub use series::QSeries;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar used throughout.
pub type Q = BigRational;

/// Shorthand for an integer rational.
pub fn qint(n: i64) -> Q {
    Q::from(BigInt::from(n))
}

/// Shorthand for the rational n/d.
pub fn qrat(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Errors raised by series and ring operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),
    #[error("exponent rank {got} does not match lattice rank {want}")]
    RankMismatch { got: usize, want: usize },
    #[error("operation requires zero constant term")]
    NonzeroConstant,
    #[error("operation requires nonzero constant term")]
    ZeroConstant,
    #[error("substitution multiplier must be a unit (nonzero constant term)")]
    NonUnitMultiplier,
    #[error("term with non-positive grade where positive grade is required")]
    NonPositiveGrade,
    #[error("malformed series data: {0}")]
    Malformed(String),
}
