//! Discriminant of the anticanonical family fibration, read off the family
//! as a double cover of the base.

use qseries::{qint, ExponentLattice, QSeries};

use crate::EllipticError;

/// Lattice for the three pairs of homogeneous base and fibre coordinates.
pub fn family_lattice() -> ExponentLattice {
    ExponentLattice::unit_weights(["x1", "y1", "x2", "y2", "x3", "y3"]).expect("fixed lattice")
}

/// The family polynomial `x1 x2 x3^2 + x1 y2 x3 y3 + 2 y1 x2 x3 y3 + y1 y2 y3^2`.
pub fn family_polynomial() -> QSeries {
    let lat = family_lattice();
    let m = |exp: [i64; 6], c: i64| {
        QSeries::monomial(lat.clone(), 16, exp.to_vec(), qint(c)).expect("fixed monomial")
    };
    m([1, 0, 1, 0, 2, 0], 1)
        .add(&m([1, 0, 0, 1, 1, 1], 1))
        .expect("fixed lattice")
        .add(&m([0, 1, 1, 0, 1, 1], 2))
        .expect("fixed lattice")
        .add(&m([0, 1, 0, 1, 0, 2], 1))
        .expect("fixed lattice")
}

/// Discriminant data of the fibration.
#[derive(Clone, Debug)]
pub struct DiscriminantReport {
    /// `B^2 - 4AC` of the family read as a quadratic in the last coordinate
    /// pair.
    pub discriminant: QSeries,
    /// The discriminant of that binary quadratic in the first coordinate
    /// pair.
    pub secondary: QSeries,
    /// Number of distinct singular fibres of the double cover.
    pub distinct_singular_fibres: u32,
    /// Multiplicity of each singular fibre.
    pub fibre_multiplicity: u32,
    /// Singular-fibre count of the generic family of this bidegree, from the
    /// discriminant degree.
    pub generic_fibre_count: u32,
}

/// Quadratic discriminant `B^2 - 4AC` in the coordinate pair at the given
/// variable indices.
fn quadratic_discriminant(
    p: &QSeries,
    ix: usize,
    iy: usize,
) -> Result<QSeries, EllipticError> {
    let lat = p.lattice().clone();
    let trunc = p.truncation();
    let mut a = QSeries::zero(lat.clone(), trunc);
    let mut b = QSeries::zero(lat.clone(), trunc);
    let mut c = QSeries::zero(lat.clone(), trunc);
    for (v, coeff) in p.terms() {
        let mut rest = v.clone();
        let dx = rest[ix];
        let dy = rest[iy];
        rest[ix] = 0;
        rest[iy] = 0;
        let mono = QSeries::monomial(lat.clone(), trunc, rest, coeff.clone())?;
        match (dx, dy) {
            (2, 0) => a = a.add(&mono)?,
            (1, 1) => b = b.add(&mono)?,
            (0, 2) => c = c.add(&mono)?,
            _ => return Err(EllipticError::NotQuadratic { dx, dy }),
        }
    }
    let four_ac = a.mul(&c)?.scale(&qint(4));
    Ok(b.mul(&b)?.sub(&four_ac)?)
}

/// Computes both discriminants of the family and counts its singular fibres.
pub fn family_discriminant() -> Result<DiscriminantReport, EllipticError> {
    let p = family_polynomial();
    let discriminant = quadratic_discriminant(&p, 4, 5)?;
    let secondary = quadratic_discriminant(&discriminant, 0, 1)?;
    let base_degree = discriminant
        .terms()
        .map(|(v, _)| v[0] + v[1] + v[2] + v[3])
        .max()
        .unwrap_or(0) as u32;
    let pair_degree = discriminant
        .terms()
        .map(|(v, _)| v[0] + v[1])
        .max()
        .unwrap_or(0) as u32;
    let distinct = if secondary.is_zero() { 1 } else { pair_degree };
    Ok(DiscriminantReport {
        discriminant,
        secondary,
        distinct_singular_fibres: distinct,
        fibre_multiplicity: base_degree / distinct,
        generic_fibre_count: base_degree,
    })
}
