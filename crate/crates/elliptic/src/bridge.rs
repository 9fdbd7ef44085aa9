//! Numeric bridges: the specialized symmetric-locus series against theta
//! combinations, and the modular identities tying the fibre modulus to the
//! half-plane parameter.

use astro_float::{BigFloat, Consts};
use qseries::QSeries;

use crate::pencil::modulus_j_formula;
use crate::theta::{below, nome_power, theta, Complex, PRECISION, RM};
use crate::{qrat, EllipticError, Q};

/// One checked identity: measured left side, declared right side, the
/// best-fit ratio between them and the absolute residual.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: Complex,
    pub rhs: Complex,
    pub ratio: Complex,
    pub residual: BigFloat,
}

impl IdentityCheck {
    fn new(name: &'static str, lhs: Complex, rhs: Complex) -> Self {
        let residual = lhs.sub(&rhs).modulus();
        let ratio = lhs.div(&rhs);
        Self {
            name,
            lhs,
            rhs,
            ratio,
            residual,
        }
    }

    pub fn residual_below(&self, tol: f64) -> bool {
        below(&self.residual, tol)
    }
}

/// A batch of identity checks at one half-plane point.
#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub rho: Complex,
    pub checks: Vec<IdentityCheck>,
}

impl ConsistencyReport {
    pub fn all_below(&self, tol: f64) -> bool {
        self.checks.iter().all(|c| c.residual_below(tol))
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// The three specialized coefficient series on the symmetric locus, as
/// univariate series in the locus variable.
#[derive(Clone, Debug)]
pub struct SymmetricLocusSeries {
    /// The odd-square series, coefficient of the height-one output.
    pub odd: QSeries,
    /// The diagonal square coefficient including its leading one.
    pub diagonal: QSeries,
    /// The off-diagonal square coefficient.
    pub cross: QSeries,
}

/// Evaluates a univariate series at the point corresponding to `rho` under
/// the quarter-nome dictionary `v = e^{i pi rho / 4}`.
pub fn eval_series_at_nome(
    series: &QSeries,
    rho: &Complex,
    cc: &mut Consts,
) -> Result<Complex, EllipticError> {
    if !rho.im.is_positive() {
        return Err(EllipticError::NonPositiveImaginaryPart);
    }
    let mut acc = Complex::zero();
    for (v, c) in series.terms() {
        let s = Q::from(num_bigint::BigInt::from(v[0])) / Q::from(num_bigint::BigInt::from(4));
        let point = nome_power(rho, &s, cc);
        acc = acc.add(&point.mul(&Complex::from_rational(c)));
    }
    Ok(acc)
}

/// Compares the three specialized series against their theta counterparts at
/// one half-plane point: the odd series against half of the second theta,
/// and the diagonal and cross series against the half sum and half
/// difference of the third and fourth.
pub fn symmetric_locus_bridge(
    series: &SymmetricLocusSeries,
    rho: &Complex,
    tol: f64,
) -> Result<ConsistencyReport, EllipticError> {
    let mut cc = Consts::new().expect("constants cache");
    let t2 = theta(2, rho, tol)?.value;
    let t3 = theta(3, rho, tol)?.value;
    let t4 = theta(4, rho, tol)?.value;
    let half = Complex::from_rational(&qrat(1, 2));
    let odd = eval_series_at_nome(&series.odd, rho, &mut cc)?;
    let diagonal = eval_series_at_nome(&series.diagonal, rho, &mut cc)?;
    let cross = eval_series_at_nome(&series.cross, rho, &mut cc)?;
    let checks = vec![
        IdentityCheck::new("odd-series vs half theta2", odd, t2.mul(&half)),
        IdentityCheck::new(
            "diagonal series vs (theta3+theta4)/2",
            diagonal,
            t3.add(&t4).mul(&half),
        ),
        IdentityCheck::new(
            "cross series vs (theta3-theta4)/2",
            cross,
            t3.sub(&t4).mul(&half),
        ),
    ];
    Ok(ConsistencyReport {
        rho: rho.clone(),
        checks,
    })
}

/// Evaluates the modulus formula at a complex modulus.
pub fn modulus_j_value(k: &Complex) -> Complex {
    let formula = modulus_j_formula();
    let horner = |coeffs: &[Q]| {
        let mut acc = Complex::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(k).add(&Complex::from_rational(c));
        }
        acc
    };
    horner(formula.num().coeffs()).div(&horner(formula.den().coeffs()))
}

/// The family parameter at a half-plane point, `t = theta2 / (2 theta3)`.
pub fn parameter_at(rho: &Complex, tol: f64) -> Result<Complex, EllipticError> {
    let t2 = theta(2, rho, tol)?.value;
    let t3 = theta(3, rho, tol)?.value;
    Ok(t2.div(&t3.scale(&BigFloat::from_f64(2.0, PRECISION))))
}

/// Verifies the automorphy-free modular identities and the agreement of the
/// two elliptic curves attached to `rho`: the fibre at `t(rho)` and the
/// quotient parameter `rho / (2 - rho)`.
pub fn modular_consistency(rho: &Complex, tol: f64) -> Result<ConsistencyReport, EllipticError> {
    let t2 = theta(2, rho, tol)?.value;
    let t3 = theta(3, rho, tol)?.value;
    let t4 = theta(4, rho, tol)?.value;
    let shifted = Complex::new(
        rho.re.add(&BigFloat::from_f64(1.0, PRECISION), PRECISION, RM),
        rho.im.clone(),
    );
    let s3 = theta(3, &shifted, tol)?.value;
    let s4 = theta(4, &shifted, tol)?.value;
    let halved = rho.scale(&BigFloat::from_f64(0.5, PRECISION));
    let h2 = theta(2, &halved, tol)?.value;
    let h3 = theta(3, &halved, tol)?.value;
    let two = Complex::from_f64(2.0, 0.0);
    let mut checks = vec![
        IdentityCheck::new("theta3/theta4 vs theta4/theta3 at shift", t3.div(&t4), s4.div(&s3)),
        IdentityCheck::new(
            "fourth-power identity",
            t3.powi(4),
            t2.powi(4).add(&t4.powi(4)),
        ),
        IdentityCheck::new(
            "half-parameter modulus identity",
            t2.powi(2).add(&t3.powi(2)).div(&t2.mul(&t3).mul(&two)),
            h3.powi(2).div(&h2.powi(2)),
        ),
    ];
    let t = t2.div(&t3.mul(&two));
    let quarter = Complex::from_rational(&qrat(1, 4));
    let k_fibre = t.mul(&t).add(&quarter).div(&t);
    let j_fibre = modulus_j_value(&k_fibre);
    let tau = rho.div(&two.sub(rho));
    let k_tau = theta(2, &tau, tol)?.value.powi(2).div(&theta(3, &tau, tol)?.value.powi(2));
    let j_tau = modulus_j_value(&k_tau);
    let scale_inv = Complex::one().div(&Complex::new(
        j_fibre.modulus().max(&BigFloat::from_f64(1.0, PRECISION)),
        BigFloat::from_f64(0.0, PRECISION),
    ));
    checks.push(IdentityCheck::new(
        "j agreement (relative)",
        j_fibre.mul(&scale_inv),
        j_tau.mul(&scale_inv),
    ));
    Ok(ConsistencyReport {
        rho: rho.clone(),
        checks,
    })
}
