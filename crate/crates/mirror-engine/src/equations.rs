//! Assembly of the three mirror product expansions.

use qseries::QSeries;

use crate::enumerate::{theta_product_coefficients, OutputName, ProductCoefficients};
use crate::walls::WallTable;
use crate::{mirror_lattice, EngineError};

use affine_base::{phi, UCoverPoint};

/// One theta product expanded over the output generators.
#[derive(Clone, Debug)]
pub struct ProductExpansion {
    /// Direction residues (mod 4) of the two primitive factors.
    pub left: u8,
    pub right: u8,
    pub truncation: i64,
    pub coefficients: ProductCoefficients,
}

impl ProductExpansion {
    /// Coefficient series at a named output (zero when absent).
    pub fn coefficient(&self, name: OutputName) -> QSeries {
        self.coefficients.coefficient(name, self.truncation)
    }
}

/// The full structure-constant table: the product of the two odd-index
/// primitive generators, the product of the two even-index ones, and the four
/// squares.
#[derive(Clone, Debug)]
pub struct MirrorEquations {
    pub truncation: i64,
    /// D1 * D3.
    pub odd_product: ProductExpansion,
    /// D2 * D4.
    pub even_product: ProductExpansion,
    /// D_i * D_i at index i - 1.
    pub squares: [ProductExpansion; 4],
}

impl MirrorEquations {
    /// Coefficient of the first product (D1 * D3) at a named output.
    pub fn f(&self, name: OutputName) -> QSeries {
        self.odd_product.coefficient(name)
    }

    /// Coefficient of the second product (D2 * D4) at a named output.
    pub fn g(&self, name: OutputName) -> QSeries {
        self.even_product.coefficient(name)
    }

    /// Coefficient of the square of D_i at a named output. At the diagonal
    /// output 2 D_i the leading 1 is split off, so the returned series has
    /// zero constant term.
    pub fn r(&self, i: usize, name: OutputName) -> QSeries {
        let raw = self.squares[i - 1].coefficient(name);
        if name == OutputName::TwoD(i) {
            raw.sub(&QSeries::one(mirror_lattice(), self.truncation))
                .expect("same lattice")
        } else {
            raw
        }
    }
}

/// Expands all three product families against the supplied wall table.
///
/// # Errors
/// As for [`theta_product_coefficients`].
pub fn assemble_equations(
    walls: &WallTable,
    truncation: i64,
) -> Result<MirrorEquations, EngineError> {
    let expand = |left: u8, right: u8| -> Result<ProductExpansion, EngineError> {
        Ok(ProductExpansion {
            left,
            right,
            truncation,
            coefficients: theta_product_coefficients(left, right, walls, truncation, 0)?,
        })
    };
    Ok(MirrorEquations {
        truncation,
        odd_product: expand(0, 2)?,
        even_product: expand(1, 3)?,
        squares: [
            expand(0, 0)?,
            expand(1, 1)?,
            expand(2, 2)?,
            expand(3, 3)?,
        ],
    })
}

fn phi_vec(k: i64) -> [i64; 4] {
    phi(&UCoverPoint::integral(k))
        .integer_coeffs()
        .expect("integral potential value")
}

/// The factored single-bend double sum: the sum over residue-zero tangency-1
/// wall monomials times the sum over index pairs m, n > 0 of
/// `z^{phi(4m+4n) + phi(-4n) - phi(4m)}`, truncated by grade.
///
/// # Errors
/// Fails if an index pair produces a non-effective exponent.
pub fn single_bend_series(walls: &WallTable, truncation: i64) -> Result<QSeries, EngineError> {
    if truncation < 1 {
        return Err(EngineError::TruncationTooSmall(truncation));
    }
    let lat = mirror_lattice();
    let mut wall_factor = QSeries::zero(lat.clone(), truncation);
    for wall in walls.tangency1.iter().filter(|w| w.ray_residue == 0) {
        let k = i64::from(wall.fibre_steps);
        let mono = QSeries::monomial(
            lat.clone(),
            truncation,
            vec![k, k, k, k, 1],
            wall.count.clone(),
        )?;
        wall_factor = wall_factor.add(&mono)?;
    }
    if wall_factor.terms().next().is_none() {
        return Ok(wall_factor);
    }
    let mut index_factor = QSeries::zero(lat.clone(), truncation);
    let mut n = 1i64;
    loop {
        let phi_neg = phi_vec(-4 * n);
        let mut m = 1i64;
        let mut any = false;
        loop {
            let a = phi_vec(4 * m + 4 * n);
            let b = phi_vec(4 * m);
            let d: Vec<i64> = (0..4).map(|j| a[j] + phi_neg[j] - b[j]).collect();
            let grade: i64 = d.iter().sum();
            if grade > truncation {
                break;
            }
            if d.iter().any(|&e| e < 0) {
                return Err(EngineError::NonEffectiveExponent {
                    exponent: d,
                    tx: 4 * m,
                    ty: 1,
                });
            }
            any = true;
            let mut exp = d;
            exp.push(0);
            let mono = QSeries::monomial(lat.clone(), truncation, exp, qseries::qint(1))?;
            index_factor = index_factor.add(&mono)?;
            m += 1;
        }
        if !any {
            break;
        }
        n += 1;
    }
    Ok(wall_factor.mul(&index_factor)?)
}
