//! The piecewise-linear potential and its growth bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::charts::ConeChart;
use crate::BaseError;

type Q = BigRational;

fn qi(n: i64) -> Q {
    Q::from(BigInt::from(n))
}

/// A point of the universal cover with positive height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UCoverPoint {
    x: Q,
    y: Q,
}

impl UCoverPoint {
    /// # Errors
    /// Fails when `y <= 0`.
    pub fn new(x: Q, y: Q) -> Result<Self, BaseError> {
        if y.is_positive() {
            Ok(Self { x, y })
        } else {
            Err(BaseError::NonPositiveHeight(y.to_string()))
        }
    }

    /// The integral point (k, 1).
    pub fn integral(k: i64) -> Self {
        Self {
            x: qi(k),
            y: qi(1),
        }
    }

    /// A rational point (n/d, 1).
    pub fn rational(num: i64, den: i64) -> Result<Self, BaseError> {
        Self::new(Q::new(BigInt::from(num), BigInt::from(den)), qi(1))
    }

    pub fn x(&self) -> &Q {
        &self.x
    }

    pub fn y(&self) -> &Q {
        &self.y
    }
}

/// A value of the potential: a rational combination of the boundary classes
/// D1..D4, with the fibre class F stored expanded as (1, 1, 1, 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLValue {
    coeffs: [Q; 4],
}

impl PLValue {
    pub fn zero() -> Self {
        Self {
            coeffs: [Q::zero(), Q::zero(), Q::zero(), Q::zero()],
        }
    }

    /// The basis class D_i, i in 1..=4.
    pub fn boundary_class(i: usize) -> Self {
        assert!((1..=4).contains(&i), "class index out of range");
        let mut v = Self::zero();
        v.coeffs[i - 1] = qi(1);
        v
    }

    /// The fibre class F = D1 + D2 + D3 + D4.
    pub fn fibre() -> Self {
        Self {
            coeffs: [qi(1), qi(1), qi(1), qi(1)],
        }
    }

    pub fn from_coeffs(coeffs: [Q; 4]) -> Self {
        Self { coeffs }
    }

    pub fn from_integers(c: [i64; 4]) -> Self {
        Self {
            coeffs: [qi(c[0]), qi(c[1]), qi(c[2]), qi(c[3])],
        }
    }

    pub fn coeffs(&self) -> &[Q; 4] {
        &self.coeffs
    }

    /// Integer coefficients when the value is integral.
    pub fn integer_coeffs(&self) -> Option<[i64; 4]> {
        let mut out = [0i64; 4];
        for (o, c) in out.iter_mut().zip(&self.coeffs) {
            if !c.is_integer() {
                return None;
            }
            *o = i64::try_from(c.to_integer()).ok()?;
        }
        Some(out)
    }

    /// Total grade d1 + d2 + d3 + d4.
    pub fn grade(&self) -> Q {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut v = self.clone();
        for (a, b) in v.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        v
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut v = self.clone();
        for (a, b) in v.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        v
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut v = self.clone();
        for a in v.coeffs.iter_mut() {
            *a *= s;
        }
        v
    }

    pub fn scale_int(&self, s: i64) -> Self {
        self.scale(&qi(s))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a >= b)
    }

    /// All components nonnegative.
    pub fn is_effective(&self) -> bool {
        self.dominates(&Self::zero())
    }
}

/// The height coordinate, extended linearly to tangent vectors.
pub fn y_grade(v: (&Q, &Q)) -> Q {
    v.1.clone()
}

/// The bend class of the potential across the ray through (k, 1):
/// `D_{((k-1) mod 4) + 1}`, so k = 1, 2, 3, 0 carry D1, D2, D3, D4. This is
/// forced by subtracting adjacent chart formulas; it is periodic with
/// period four.
pub fn kink(k: i64) -> PLValue {
    PLValue::boundary_class(((k - 1).rem_euclid(4) + 1) as usize)
}

/// Evaluates the potential at a point of positive height using the chart
/// containing it; agrees across overlapping charts.
pub fn phi(p: &UCoverPoint) -> PLValue {
    let chart = ConeChart::containing(p);
    chart.eval(p)
}

pub(crate) fn phi_integral(k: i64) -> PLValue {
    phi(&UCoverPoint::integral(k))
}

/// Result of the consecutive-step growth check at x-coordinate `m`.
#[derive(Clone, Debug)]
pub struct DifferenceBoundCheck {
    /// Step compared at height two: `2 * (phi(m, 1) - phi(m - 1, 1))` for
    /// positive m, and `2 * (phi(m - 1, 1) - phi(m, 1))` for negative m.
    pub doubled_step: PLValue,
    /// Lower bound: a single boundary class with an integer multiplier.
    pub bound: PLValue,
    /// Componentwise `doubled_step >= bound`.
    pub pass: bool,
}

/// Checks the growth bound for the potential's consecutive steps.
///
/// The step away from the zero cone, rescaled to height two (where the
/// coefficient below is sharp), dominates a multiple of one boundary class:
/// - m >= 2: `2 (phi(m) - phi(m-1)) >= (2 floor(m/4) - 1) D_{((m-2) mod 4)+1}`;
/// - m <= -2: `2 (phi(m-1) - phi(m)) >= (1 - 2 trunc(m/4)) D_{((m-1) mod 4)+1}`
///   with `trunc` rounding toward zero.
///
/// At height one the same inequalities hold with the right side halved; the
/// doubled form keeps the stated integer coefficients exact.
///
/// # Errors
/// Fails for |m| < 2.
pub fn phi_difference_bound(m: i64) -> Result<DifferenceBoundCheck, BaseError> {
    if m.abs() < 2 {
        return Err(BaseError::StepOutOfRange(m));
    }
    let (doubled_step, coeff, class_index) = if m > 0 {
        let step = phi_integral(m).sub(&phi_integral(m - 1)).scale_int(2);
        (step, 2 * m.div_euclid(4) - 1, (m - 2).rem_euclid(4) + 1)
    } else {
        let step = phi_integral(m - 1).sub(&phi_integral(m)).scale_int(2);
        (step, 1 - 2 * (m / 4), (m - 1).rem_euclid(4) + 1)
    };
    let bound = PLValue::boundary_class(class_index as usize).scale_int(coeff);
    let pass = doubled_step.dominates(&bound);
    Ok(DifferenceBoundCheck {
        doubled_step,
        bound,
        pass,
    })
}
