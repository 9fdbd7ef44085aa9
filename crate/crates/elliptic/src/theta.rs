//! High-precision complex arithmetic and Jacobi theta evaluation at the
//! origin, with certified series tails.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::{BigInt, Sign};

use crate::{EllipticError, Q};

/// Working mantissa precision in bits (roughly 96 decimal digits).
pub const PRECISION: usize = 320;
pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// Exact conversion of an integer into a binary float.
fn bigint_to_float(n: &BigInt) -> BigFloat {
    let (sign, digits) = n.to_u64_digits();
    let base = BigFloat::from_f64(18446744073709551616.0, PRECISION);
    let mut acc = BigFloat::from_u64(0, PRECISION);
    for d in digits.iter().rev() {
        acc = acc
            .mul(&base, PRECISION, RM)
            .add(&BigFloat::from_u64(*d, PRECISION), PRECISION, RM);
    }
    if sign == Sign::Minus {
        acc.neg()
    } else {
        acc
    }
}

/// Conversion of an exact rational into a binary float.
pub fn rational_to_float(q: &Q) -> BigFloat {
    bigint_to_float(q.numer()).div(&bigint_to_float(q.denom()), PRECISION, RM)
}

/// A complex number over high-precision binary floats.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Complex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Self::new(
            BigFloat::from_f64(re, PRECISION),
            BigFloat::from_f64(im, PRECISION),
        )
    }

    pub fn zero() -> Self {
        Self::from_f64(0.0, 0.0)
    }

    pub fn one() -> Self {
        Self::from_f64(1.0, 0.0)
    }

    pub fn from_rational(q: &Q) -> Self {
        Self::new(rational_to_float(q), BigFloat::from_f64(0.0, PRECISION))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.re.add(&other.re, PRECISION, RM),
            self.im.add(&other.im, PRECISION, RM),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.re.sub(&other.re, PRECISION, RM),
            self.im.sub(&other.im, PRECISION, RM),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ac = self.re.mul(&other.re, PRECISION, RM);
        let bd = self.im.mul(&other.im, PRECISION, RM);
        let ad = self.re.mul(&other.im, PRECISION, RM);
        let bc = self.im.mul(&other.re, PRECISION, RM);
        Self::new(ac.sub(&bd, PRECISION, RM), ad.add(&bc, PRECISION, RM))
    }

    pub fn div(&self, other: &Self) -> Self {
        let n2 = other
            .re
            .mul(&other.re, PRECISION, RM)
            .add(&other.im.mul(&other.im, PRECISION, RM), PRECISION, RM);
        let ac = self.re.mul(&other.re, PRECISION, RM);
        let bd = self.im.mul(&other.im, PRECISION, RM);
        let bc = self.im.mul(&other.re, PRECISION, RM);
        let ad = self.re.mul(&other.im, PRECISION, RM);
        Self::new(
            ac.add(&bd, PRECISION, RM).div(&n2, PRECISION, RM),
            bc.sub(&ad, PRECISION, RM).div(&n2, PRECISION, RM),
        )
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        Self::new(
            self.re.mul(s, PRECISION, RM),
            self.im.mul(s, PRECISION, RM),
        )
    }

    pub fn modulus(&self) -> BigFloat {
        self.re
            .mul(&self.re, PRECISION, RM)
            .add(&self.im.mul(&self.im, PRECISION, RM), PRECISION, RM)
            .sqrt(PRECISION, RM)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

/// Compares a magnitude against an `f64` bound.
pub fn below(x: &BigFloat, bound: f64) -> bool {
    matches!(
        x.abs().cmp(&BigFloat::from_f64(bound, PRECISION)),
        Some(c) if c < 0
    )
}

/// A theta value at the origin with its certified truncation tail.
#[derive(Clone, Debug)]
pub struct ThetaValue {
    pub rho: Complex,
    pub value: Complex,
    pub tail_bound: BigFloat,
}

/// `e^{i pi rho s}` for rational `s`, as (magnitude-split) rectangular form.
pub(crate) fn nome_power(rho: &Complex, s: &Q, cc: &mut Consts) -> Complex {
    let pi = cc.pi(PRECISION, RM);
    let sf = rational_to_float(s);
    let mag = pi
        .mul(&rho.im, PRECISION, RM)
        .mul(&sf, PRECISION, RM)
        .neg()
        .exp(PRECISION, RM, cc);
    let angle = pi.mul(&rho.re, PRECISION, RM).mul(&sf, PRECISION, RM);
    Complex::new(
        angle.cos(PRECISION, RM, cc),
        angle.sin(PRECISION, RM, cc),
    )
    .scale(&mag)
}

/// Evaluates a Jacobi theta function at `z = 0` with tail certified below
/// `tol`. Kinds follow the classical numbering; the first kind vanishes
/// identically at the origin.
pub fn theta(kind: u8, rho: &Complex, tol: f64) -> Result<ThetaValue, EllipticError> {
    if !rho.im.is_positive() {
        return Err(EllipticError::NonPositiveImaginaryPart);
    }
    if !(1..=4).contains(&kind) {
        return Err(EllipticError::InvalidThetaKind(kind));
    }
    let mut cc = Consts::new().expect("constants cache");
    if kind == 1 {
        return Ok(ThetaValue {
            rho: rho.clone(),
            value: Complex::zero(),
            tail_bound: BigFloat::from_f64(0.0, PRECISION),
        });
    }
    let pi = cc.pi(PRECISION, RM);
    let decay = pi.mul(&rho.im, PRECISION, RM).neg().exp(PRECISION, RM, &mut cc);
    let one = BigFloat::from_f64(1.0, PRECISION);
    let tail_factor = one.div(&one.sub(&decay, PRECISION, RM), PRECISION, RM);
    let two = BigFloat::from_f64(2.0, PRECISION);
    let mut value = if kind == 2 {
        Complex::zero()
    } else {
        Complex::one()
    };
    let mut tail = BigFloat::from_f64(0.0, PRECISION);
    for n in 0i64..400 {
        let (s, sign) = match kind {
            2 => (Q::new(BigInt::from((2 * n + 1) * (2 * n + 1)), BigInt::from(4)), 1),
            3 => (Q::from(BigInt::from((n + 1) * (n + 1))), 1),
            _ => (
                Q::from(BigInt::from((n + 1) * (n + 1))),
                if (n + 1) % 2 == 0 { 1 } else { -1 },
            ),
        };
        let term = nome_power(rho, &s, &mut cc).scale(&two);
        let mag = term.modulus();
        let term = if sign < 0 { term.neg() } else { term };
        value = value.add(&term);
        tail = mag.mul(&decay, PRECISION, RM).mul(&tail_factor, PRECISION, RM);
        if below(&tail, tol) && below(&mag, tol) {
            break;
        }
    }
    Ok(ThetaValue {
        rho: rho.clone(),
        value,
        tail_bound: tail,
    })
}
