//! Pair-of-pants enumeration over the four-component base and assembly of the
//! mirror equations.
//!
//! Theta generators are indexed by integral directions of the base: the
//! primitive generator with direction residue `i - 1` mod 4 at height one is
//! written `D_i`, and height-two points give the `2 D_i` generators. Products
//! of two primitive generators expand as
//!
//! ```text
//! theta_A * theta_B = sum(height-2 coefficients) + sum(height-1 coefficients) + constant
//! ```
//!
//! with every coefficient a truncated series in the boundary classes D1..D4,
//! a section marker S, and the fibre class F = D1 + D2 + D3 + D4.
//!
//! Pairs of broken lines come in five shapes (no bend; one tangency-1 bend;
//! one tangency-2 bend; two tangency-1 bends on separate lines; two
//! tangency-1 bends on one line). Wall data is input: tangency-1 counts per
//! ray residue and tangency-2 counts per height-two ray residue.

mod enumerate;
mod equations;
mod specialize;
mod svg;
mod walls;

pub use enumerate::{
    enumerate_pairs, theta_product_coefficients, BendEvent, BrokenLine, OutputName, PairOfPants,
    ProductCoefficients,
};
pub use equations::{assemble_equations, single_bend_series, MirrorEquations, ProductExpansion};
pub use specialize::{project_to_boundary_lattice, specialize_symmetric};
pub use svg::svg_pairs;
pub use walls::{Tangency1Wall, Tangency2Wall, WallTable};

use qseries::ExponentLattice;

/// The series lattice: boundary classes D1..D4 (weight one each, so the fibre
/// class F has weight four) and one section marker S of weight one.
pub fn mirror_lattice() -> ExponentLattice {
    ExponentLattice::unit_weights(["D1", "D2", "D3", "D4", "S"]).expect("fixed lattice")
}

/// The univariate lattice for the symmetric-locus specialization.
pub fn v_lattice() -> ExponentLattice {
    ExponentLattice::unit_weights(["v"]).expect("fixed lattice")
}

/// The four-variable boundary lattice without the section marker.
pub fn boundary_lattice() -> ExponentLattice {
    ExponentLattice::unit_weights(["D1", "D2", "D3", "D4"]).expect("fixed lattice")
}

/// Errors raised by enumeration and assembly.
#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    #[error("truncation must be at least one, got {0}")]
    TruncationTooSmall(i64),
    #[error("pair produced a non-effective exponent {exponent:?} at target ({tx}, {ty}): potential bookkeeping bug")]
    NonEffectiveExponent {
        exponent: Vec<i64>,
        tx: i64,
        ty: i64,
    },
    #[error("series living on the section-marker lattice has nonzero S-exponent")]
    SectionMarkerPresent,
    #[error(transparent)]
    Series(#[from] qseries::SeriesError),
}
