//! Conversion of curve counts into the wall-table input of the product
//! engine.

use mirror_engine::{Tangency1Wall, Tangency2Wall, WallTable};
use num_traits::Zero;
use qseries::{qint, Q, QSeries};

use crate::CountError;

/// Relative count on the surface from a threefold count: each curve on the
/// surface is counted with multiplicity four upstairs.
pub fn relative_bisection_count(threefold: &Q) -> Q {
    threefold / qint(4)
}

/// Assembles the wall table: one tangency-1 wall per primitive ray residue
/// and fibre step with the section-series coefficient as count, and one
/// tangency-2 wall per even ray residue carrying the relative bisection
/// count.
pub fn to_wall_counts(
    section_series: &QSeries,
    max_fibre_steps: u32,
    bisection_relative: &Q,
) -> Result<WallTable, CountError> {
    if i64::from(max_fibre_steps) > section_series.truncation() {
        return Err(CountError::OrderBeyondTruncation {
            wanted: i64::from(max_fibre_steps),
            truncation: section_series.truncation(),
        });
    }
    let mut table = WallTable::empty();
    for residue in 0..4u8 {
        for k in 0..=max_fibre_steps {
            let count = section_series.coeff(&[i64::from(k)]);
            if count.is_zero() {
                continue;
            }
            table.tangency1.push(Tangency1Wall {
                ray_residue: residue,
                section: format!("E+{k}F"),
                fibre_steps: k,
                count,
            });
        }
    }
    for residue in [0u8, 2, 4, 6] {
        table.tangency2.push(Tangency2Wall {
            ray_residue: residue,
            section: "2E".to_string(),
            fibre_steps: 0,
            count: bisection_relative.clone(),
        });
    }
    Ok(table)
}
