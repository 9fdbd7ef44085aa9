//! The section-count generating series.

use qseries::{qint, QSeries};

use crate::{z_lattice, CountError};

/// Expands `prod_{m >= 1} (1 - z^m)^{-12}` to order `n`. The coefficient of
/// `z^m` counts the sections in class `E + mF` of the rational elliptic
/// surface, with the nodal-curve multiplicities already summed in.
pub fn bryan_leung_series(n: i64) -> Result<QSeries, CountError> {
    if n < 0 {
        return Err(CountError::NegativeOrder(n));
    }
    let lat = z_lattice();
    let mut out = QSeries::one(lat.clone(), n);
    for m in 1..=n {
        let factor = QSeries::one(lat.clone(), n)
            .sub(&QSeries::monomial(lat.clone(), n, vec![m], qint(1))?)?
            .inverse()?
            .pow(12)?;
        out = out.mul(&factor)?;
    }
    Ok(out)
}
