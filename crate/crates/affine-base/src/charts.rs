//! Cone charts and the explicit chart formulas for the potential.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::phi::{PLValue, UCoverPoint};

type Q = BigRational;

fn qi(n: i64) -> Q {
    Q::from(BigInt::from(n))
}

/// Which of the four sector shapes a cone is, by the residue of its left
/// ray's x-coordinate mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectorType {
    /// Left ray at 4n.
    FromZero,
    /// Left ray at 4n + 1.
    FromOne,
    /// Left ray at 4n + 2.
    FromTwo,
    /// Left ray at 4n + 3.
    FromThree,
}

impl SectorType {
    /// Sector type of the cone whose left ray passes through (k, 1).
    pub fn of_ray(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::FromZero,
            1 => Self::FromOne,
            2 => Self::FromTwo,
            _ => Self::FromThree,
        }
    }
}

/// The cone spanned by (k, 1) and (k + 1, 1), presented as the sector with
/// period index n = floor(k / 4) and shape `SectorType::of_ray(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeChart {
    /// x-coordinate of the left ray at height one.
    pub left: i64,
}

impl ConeChart {
    /// The chart whose left ray is (k, 1).
    pub fn new(k: i64) -> Self {
        Self { left: k }
    }

    /// Period index n with left = 4n + residue.
    pub fn period_index(&self) -> i64 {
        self.left.div_euclid(4)
    }

    pub fn sector(&self) -> SectorType {
        SectorType::of_ray(self.left)
    }

    /// The chart containing a point of positive height (the one whose left
    /// ray is at floor(x / y)).
    pub fn containing(p: &UCoverPoint) -> Self {
        let ratio = p.x() / p.y();
        Self::new(i64::try_from(ratio.floor().to_integer()).expect("coordinate in range"))
    }

    /// Whether the point lies in the closed cone.
    pub fn contains(&self, p: &UCoverPoint) -> bool {
        if !p.y().is_positive() {
            return false;
        }
        let ratio = p.x() / p.y();
        qi(self.left) <= ratio && ratio <= qi(self.left + 1)
    }

    /// Evaluates the chart's linear formula at a point.
    ///
    /// With n the period index, x and y the coordinates and F = (1, 1, 1, 1),
    /// the four shapes are:
    /// - left at 4n:   `n x F - (n(2n-1) D1 + 2n^2 D2 + n(2n+1) D3 + n(2n+2) D4) y`
    /// - left at 4n+1: add `x D1`, replace the D1 multiplier by (n+1)(2n+1)
    /// - left at 4n+2: further add `x D2`, replace the D2 multiplier by 2(n+1)^2
    /// - left at 4n+3: further add `x D3`, replace the D3 multiplier by (n+1)(2n+3)
    pub fn eval(&self, p: &UCoverPoint) -> PLValue {
        let n = self.period_index();
        let (x_classes, y_mults): ([i64; 4], [i64; 4]) = match self.sector() {
            SectorType::FromZero => (
                [0, 0, 0, 0],
                [n * (2 * n - 1), 2 * n * n, n * (2 * n + 1), n * (2 * n + 2)],
            ),
            SectorType::FromOne => (
                [1, 0, 0, 0],
                [
                    (n + 1) * (2 * n + 1),
                    2 * n * n,
                    n * (2 * n + 1),
                    n * (2 * n + 2),
                ],
            ),
            SectorType::FromTwo => (
                [1, 1, 0, 0],
                [
                    (n + 1) * (2 * n + 1),
                    2 * (n + 1) * (n + 1),
                    n * (2 * n + 1),
                    n * (2 * n + 2),
                ],
            ),
            SectorType::FromThree => (
                [1, 1, 1, 0],
                [
                    (n + 1) * (2 * n + 1),
                    2 * (n + 1) * (n + 1),
                    (n + 1) * (2 * n + 3),
                    n * (2 * n + 2),
                ],
            ),
        };
        let mut coeffs = [qi(0), qi(0), qi(0), qi(0)];
        for i in 0..4 {
            coeffs[i] = qi(n) * p.x() + qi(x_classes[i]) * p.x() - qi(y_mults[i]) * p.y();
        }
        PLValue::from_coeffs(coeffs)
    }
}
