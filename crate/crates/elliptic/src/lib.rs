//! Verification of the elliptic fibre of the mirror family.
//!
//! Four pieces:
//!
//! - exact univariate polynomials and reduced rational functions,
//! - the fibre j-invariant along two independent routes (displayed
//!   Weierstrass data and the quadric-pencil binary quartic) plus the
//!   classical modulus formula,
//! - Jacobi theta numerics at the origin with certified tails,
//! - numeric bridges: the specialized symmetric-locus series against theta
//!   combinations, the modular identities, and the family discriminant.

mod bridge;
mod discriminant;
mod pencil;
mod poly;
mod theta;

pub use bridge::{
    eval_series_at_nome, modular_consistency, modulus_j_value, parameter_at,
    symmetric_locus_bridge, ConsistencyReport, IdentityCheck, SymmetricLocusSeries,
};
pub use discriminant::{
    family_discriminant, family_lattice, family_polynomial, DiscriminantReport,
};
pub use pencil::{
    j_from_modulus, j_of_modulus_value, modulus_j_formula, parameter_modulus, pencil_j_invariant,
    pencil_quartic, quartic_j, weierstrass_j,
};
pub use poly::{Poly, RationalFunction};
pub use theta::{below, rational_to_float, theta, Complex, ThetaValue, PRECISION};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Q = BigRational;

/// Exact rational from a numerator and denominator.
pub fn qrat(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Errors raised by the fibre verification.
#[derive(Debug, thiserror::Error)]
pub enum EllipticError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pencil is identically singular")]
    DegeneratePencil,
    #[error("the two j-invariant routes disagree")]
    PathMismatch,
    #[error("evaluation at a pole: {0}")]
    PoleInput(Q),
    #[error("exponent {exponent} is not a multiple of {step}")]
    IndivisibleExponent { exponent: usize, step: usize },
    #[error("polynomial is not quadratic in the chosen pair: degrees ({dx}, {dy})")]
    NotQuadratic { dx: i64, dy: i64 },
    #[error("parameter must have positive imaginary part")]
    NonPositiveImaginaryPart,
    #[error("theta kind {0} outside 1..=4")]
    InvalidThetaKind(u8),
    #[error(transparent)]
    Series(#[from] qseries::SeriesError),
}
