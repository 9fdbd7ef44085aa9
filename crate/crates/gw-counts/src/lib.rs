//! Curve-count inputs for the mirror construction.
//!
//! Four pipelines feed the wall data:
//!
//! - the section-count generating series `prod (1 - z^m)^{-12}`,
//! - enumeration of section classes on the blown-up plane within the
//!   quadratic search zone,
//! - the hypergeometric series of the bidegree (3,1,0,0) x (0,1,1,2)
//!   complete intersection in P^2 x (P^1)^3, its mirror transformation and
//!   the extraction of the degree-two curve counts,
//! - the multiplicity bookkeeping converting threefold counts to relative
//!   counts on the surface, emitted as a wall table.

mod bryan_leung;
mod ifunc;
mod mirror_map;
mod sections;
mod walls;

pub use bryan_leung::bryan_leung_series;
pub use ifunc::{
    certify_i_function, class_grade, euler_class, i_function, stirling_radius, IFunctionTable,
    ThreefoldClass,
};
pub use mirror_map::{
    extract_curve_count, invert_multipliers, mirror_map, BetaSeries, JFunctionTable, MirrorMap,
};
pub use sections::{goldilocks_zone, goldilocks_zone_windowed, SectionClass};
pub use walls::{relative_bisection_count, to_wall_counts};

use qseries::ExponentLattice;

/// Univariate lattice for fibre-degree series.
pub fn z_lattice() -> ExponentLattice {
    ExponentLattice::unit_weights(["z"]).expect("fixed lattice")
}

/// Four-variable lattice for the threefold curve-class series.
pub fn q_lattice() -> ExponentLattice {
    ExponentLattice::unit_weights(["q1", "q2", "q3", "q4"]).expect("fixed lattice")
}

/// Errors raised by the count pipelines.
#[derive(Debug, thiserror::Error)]
pub enum CountError {
    #[error("order must be nonnegative, got {0}")]
    NegativeOrder(i64),
    #[error("requested order {wanted} beyond series truncation {truncation}")]
    OrderBeyondTruncation { wanted: i64, truncation: i64 },
    #[error("class {0:?} exceeds the computed table grade {1}")]
    ClassOutOfRange(ThreefoldClass, u32),
    #[error("mirror transformation did not reach the required normalization at class {0:?}")]
    NormalizationFailed(ThreefoldClass),
    #[error(transparent)]
    Series(#[from] qseries::SeriesError),
}
