//! The integral affine base for a four-component boundary cycle.
//!
//! Models the upper half plane as the universal cover of the cone complex,
//! with one ray through every integral direction (k, 1) and the deck
//! transformation (x, y) -> (x + 4y, y). Provides:
//! - [`phi`]: the convex piecewise-linear potential, pinned to zero on the
//!   cone spanned by (0, 1) and (1, 1), whose bend across the ray through
//!   (k, 1) is the boundary class `D_{((k-1) mod 4) + 1}`.
//! - [`kink`]: that bend class.
//! - [`phi_difference_bound`]: the consecutive-step growth bound used by the
//!   convergence estimates.
//! - [`svg_figure`]: a small deterministic picture of the rays and cone data.

mod charts;
mod phi;
mod svg;

pub use charts::{ConeChart, SectorType};
pub use phi::{
    kink, phi, phi_difference_bound, y_grade, DifferenceBoundCheck, PLValue, UCoverPoint,
};
pub use svg::svg_figure;

/// Errors raised by base-geometry operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BaseError {
    #[error("point must have positive height, got y = {0}")]
    NonPositiveHeight(String),
    #[error("difference bound requires |m| >= 2, got {0}")]
    StepOutOfRange(i64),
}
