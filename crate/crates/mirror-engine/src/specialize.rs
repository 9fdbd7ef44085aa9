//! Restriction of coefficient series to the symmetric locus.

use qseries::QSeries;

use crate::{boundary_lattice, v_lattice, EngineError};

/// Drops the section marker from a series on the five-variable lattice.
///
/// # Errors
/// Fails with [`EngineError::SectionMarkerPresent`] if any term has a nonzero
/// marker exponent.
pub fn project_to_boundary_lattice(s: &QSeries) -> Result<QSeries, EngineError> {
    let mut out = QSeries::zero(boundary_lattice(), s.truncation());
    for (exp, coeff) in s.terms() {
        if exp[4] != 0 {
            return Err(EngineError::SectionMarkerPresent);
        }
        let mono = QSeries::monomial(
            boundary_lattice(),
            s.truncation(),
            exp[..4].to_vec(),
            coeff.clone(),
        )?;
        out = out.add(&mono)?;
    }
    Ok(out)
}

/// Sets the area of every boundary class to the single variable v, so the
/// coefficient of v^g collects all terms of grade g.
pub fn specialize_symmetric(s: &QSeries) -> Result<QSeries, EngineError> {
    let mut out = QSeries::zero(v_lattice(), s.truncation());
    for (exp, coeff) in s.terms() {
        let grade: i64 = exp.iter().sum();
        let mono = QSeries::monomial(v_lattice(), s.truncation(), vec![grade], coeff.clone())?;
        out = out.add(&mono)?;
    }
    Ok(out)
}
