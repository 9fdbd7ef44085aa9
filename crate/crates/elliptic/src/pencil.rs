//! The j-invariant of the quadric-pencil fibre, computed along two
//! independent routes that must agree.

use crate::poly::{Poly, RationalFunction};
use crate::{qrat, EllipticError, Q};

/// Homogeneous binary polynomial in the pencil parameters: `c[i]` is the
/// t-polynomial coefficient of `lambda^(d-i) mu^i`.
#[derive(Clone, Debug)]
struct BinaryForm {
    c: Vec<Poly>,
}

impl BinaryForm {
    fn zero(degree: usize) -> Self {
        Self {
            c: vec![Poly::zero(); degree + 1],
        }
    }

    fn linear(lambda: Poly, mu: Poly) -> Self {
        Self { c: vec![lambda, mu] }
    }

    fn add(&self, other: &Self) -> Self {
        assert_eq!(self.c.len(), other.c.len());
        Self {
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    fn neg(&self) -> Self {
        Self {
            c: self.c.iter().map(Poly::neg).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.c.len() + other.c.len() - 2);
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in other.c.iter().enumerate() {
                out.c[i + j] = out.c[i + j].add(&a.mul(b));
            }
        }
        out
    }
}

fn determinant(m: &[Vec<BinaryForm>]) -> BinaryForm {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = BinaryForm::zero(n);
    for (k, entry) in m[0].iter().enumerate() {
        let minor: Vec<Vec<BinaryForm>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&determinant(&minor));
        out = out.add(&if k % 2 == 0 { term } else { term.neg() });
    }
    out
}

/// Weierstrass route: `j = 6912 p^3 / (4 p^3 + 27 q^2)` from the displayed
/// short-form coefficients of the fibre.
pub fn weierstrass_j() -> Result<RationalFunction, EllipticError> {
    let p = Poly::monomial(8, qrat(-1, 3))
        .add(&Poly::monomial(4, qrat(-7, 24)))
        .add(&Poly::constant(qrat(-1, 768)));
    let q = Poly::monomial(12, qrat(2, 27))
        .add(&Poly::monomial(8, qrat(-11, 72)))
        .add(&Poly::monomial(4, qrat(-11, 1152)))
        .add(&Poly::constant(qrat(1, 55296)));
    let p3 = p.pow(3);
    let disc = p3.scale(&qrat(4, 1)).add(&q.pow(2).scale(&qrat(27, 1)));
    if disc.is_zero() {
        return Err(EllipticError::DegeneratePencil);
    }
    RationalFunction::new(p3.scale(&qrat(6912, 1)), disc)
}

/// The symmetric matrices of the two pencil quadrics, entries polynomial in
/// the family parameter.
fn pencil_matrices() -> ([[Poly; 4]; 4], [[Poly; 4]; 4]) {
    let z = Poly::zero;
    let half = || Poly::constant(qrat(1, 2));
    let mt = || Poly::monomial(1, qrat(-1, 1));
    let a1 = [
        [z(), z(), half(), z()],
        [z(), mt(), z(), z()],
        [half(), z(), z(), z()],
        [z(), z(), z(), mt()],
    ];
    let a2 = [
        [mt(), z(), z(), z()],
        [z(), z(), z(), half()],
        [z(), z(), mt(), z()],
        [z(), half(), z(), z()],
    ];
    (a1, a2)
}

/// The binary quartic `det(lambda A1 + mu A2)` of the pencil, as the five
/// t-polynomial coefficients of `lambda^(4-i) mu^i`.
pub fn pencil_quartic() -> [Poly; 5] {
    let (a1, a2) = pencil_matrices();
    let m: Vec<Vec<BinaryForm>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| BinaryForm::linear(a1[i][j].clone(), a2[i][j].clone()))
                .collect()
        })
        .collect();
    let det = determinant(&m);
    assert_eq!(det.c.len(), 5);
    [
        det.c[0].clone(),
        det.c[1].clone(),
        det.c[2].clone(),
        det.c[3].clone(),
        det.c[4].clone(),
    ]
}

/// Quartic-invariant route: the classical invariants `I`, `J` of the binary
/// quartic give `j = 1728 * 4 I^3 / (4 I^3 - J^2)`.
pub fn quartic_j() -> Result<RationalFunction, EllipticError> {
    let [a4, a3, a2, a1, a0] = pencil_quartic();
    let i = a4
        .mul(&a0)
        .scale(&qrat(12, 1))
        .sub(&a3.mul(&a1).scale(&qrat(3, 1)))
        .add(&a2.pow(2));
    let j = a4
        .mul(&a2)
        .mul(&a0)
        .scale(&qrat(72, 1))
        .add(&a3.mul(&a2).mul(&a1).scale(&qrat(9, 1)))
        .sub(&a4.mul(&a1.pow(2)).scale(&qrat(27, 1)))
        .sub(&a0.mul(&a3.pow(2)).scale(&qrat(27, 1)))
        .sub(&a2.pow(3).scale(&qrat(2, 1)));
    let i3 = i.pow(3).scale(&qrat(4, 1));
    let den = i3.sub(&j.pow(2));
    if den.is_zero() {
        return Err(EllipticError::DegeneratePencil);
    }
    RationalFunction::new(i3.scale(&qrat(1728, 1)), den)
}

/// The fibre j-invariant, computed along both routes and checked for exact
/// agreement.
pub fn pencil_j_invariant() -> Result<RationalFunction, EllipticError> {
    let a = weierstrass_j()?;
    let b = quartic_j()?;
    if a != b {
        return Err(EllipticError::PathMismatch);
    }
    Ok(a)
}

/// The modulus formula `256 (k^4 - k^2 + 1)^3 / (k^4 (k^2 - 1)^2)` as a
/// rational function in `k`.
pub fn modulus_j_formula() -> RationalFunction {
    let k2 = Poly::monomial(2, qrat(1, 1));
    let num = Poly::monomial(4, qrat(1, 1))
        .sub(&k2)
        .add(&Poly::one())
        .pow(3)
        .scale(&qrat(256, 1));
    let den = Poly::monomial(4, qrat(1, 1)).mul(&k2.sub(&Poly::one()).pow(2));
    RationalFunction::new(num, den).expect("fixed nonzero denominator")
}

/// Composes the modulus formula with a modulus expression.
pub fn j_from_modulus(k: &RationalFunction) -> Result<RationalFunction, EllipticError> {
    modulus_j_formula().compose(k)
}

/// Numeric modulus formula evaluation.
pub fn j_of_modulus_value(k: &Q) -> Result<Q, EllipticError> {
    modulus_j_formula().eval(k)
}

/// The modulus of the family parameter, `k = (t^2 + 1/4) / t`.
pub fn parameter_modulus() -> RationalFunction {
    RationalFunction::new(
        Poly::monomial(2, qrat(1, 1)).add(&Poly::constant(qrat(1, 4))),
        Poly::x(),
    )
    .expect("fixed nonzero denominator")
}
