//! The hypergeometric series of the complete intersection of bidegrees
//! (3,1,0,0) and (0,1,1,2) in P^2 x (P^1)^3.

use std::collections::BTreeMap;

use num_traits::One;
use qseries::{exp_bound_certify, qint, qrat, BoundReport, ChowElement, HbarLaurent, Q};

/// A curve class `(a, b, c, d)` graded against `H_1 .. H_4`.
pub type ThreefoldClass = [u32; 4];

/// Total degree of a class.
pub fn class_grade(beta: &ThreefoldClass) -> u32 {
    beta.iter().sum()
}

/// The Euler class of the normal bundle, `(3H_1 + H_2)(H_2 + H_3 + 2H_4)`.
pub fn euler_class() -> ChowElement {
    let l1 = ChowElement::linear([qint(3), qint(1), qint(0), qint(0)]);
    let l2 = ChowElement::linear([qint(0), qint(1), qint(1), qint(2)]);
    l1.mul(&l2)
}

/// `(H_i + m hbar)^{-1}` expanded by nilpotency of `H_i`.
fn inverse_factor(i: usize, m: i64) -> HbarLaurent {
    let h = ChowElement::h(i);
    let mut out = HbarLaurent::zero();
    let mut power = ChowElement::one();
    let mut j = 0i32;
    loop {
        if power.is_zero() {
            break;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let denom = Q::from(num_bigint::BigInt::from(m)).pow(j + 1);
        out = out.add(&HbarLaurent::from_term(
            -(j + 1),
            power.scale(&(qint(sign) / denom)),
        ));
        power = power.mul(&h);
        j += 1;
    }
    out
}

/// `X + m hbar` for a linear class `X`.
fn linear_factor(x: &ChowElement, m: i64) -> HbarLaurent {
    HbarLaurent::from_term(1, ChowElement::scalar(qint(m))).add(&HbarLaurent::from_term(0, x.clone()))
}

/// The class-beta hypergeometric summand: numerator factors for the two line
/// bundles over the toric denominator factors, without the Euler class.
fn summand(beta: &ThreefoldClass) -> HbarLaurent {
    let [a, b, c, d] = beta.map(i64::from);
    let l1 = ChowElement::linear([qint(3), qint(1), qint(0), qint(0)]);
    let l2 = ChowElement::linear([qint(0), qint(1), qint(1), qint(2)]);
    let mut r = HbarLaurent::one();
    for m in 1..=(3 * a + b) {
        r = r.mul(&linear_factor(&l1, m));
    }
    for m in 1..=(b + c + 2 * d) {
        r = r.mul(&linear_factor(&l2, m));
    }
    for (i, (deg, mult)) in [(a, 3u32), (b, 2), (c, 2), (d, 2)].into_iter().enumerate() {
        for m in 1..=deg {
            let f = inverse_factor(i + 1, m);
            for _ in 0..mult {
                r = r.mul(&f);
            }
        }
    }
    r
}

/// The computed hypergeometric table up to a total class grade.
#[derive(Clone, Debug)]
pub struct IFunctionTable {
    pub max_grade: u32,
    summands: BTreeMap<ThreefoldClass, HbarLaurent>,
}

impl IFunctionTable {
    /// The summand without the Euler class (the raw hypergeometric ratio).
    pub fn summand(&self, beta: &ThreefoldClass) -> Option<&HbarLaurent> {
        self.summands.get(beta)
    }

    /// The class-beta entry of the series, Euler class included.
    pub fn entry(&self, beta: &ThreefoldClass) -> Option<HbarLaurent> {
        self.summands
            .get(beta)
            .map(|r| r.scale_chow(&euler_class()))
    }

    pub fn classes(&self) -> impl Iterator<Item = &ThreefoldClass> {
        self.summands.keys()
    }
}

/// Computes every class of total grade at most `max_grade`.
pub fn i_function(max_grade: u32) -> IFunctionTable {
    let mut summands = BTreeMap::new();
    let g = max_grade;
    for a in 0..=g {
        for b in 0..=(g - a) {
            for c in 0..=(g - a - b) {
                for d in 0..=(g - a - b - c) {
                    let beta = [a, b, c, d];
                    summands.insert(beta, summand(&beta));
                }
            }
        }
    }
    IFunctionTable { max_grade, summands }
}

/// The factorial-comparison radius `27^5`: each of the five per-term ratios
/// bounding a coefficient (the two numerator factorials against the six
/// denominator factorials, split across the four degrees and the Euler
/// factor) is at most 27 per unit of degree.
pub fn stirling_radius() -> Q {
    qrat(27, 1).pow(5)
}

/// Certifies `|a_beta| <= r^{diag(beta)}` over every coefficient of the
/// table, with the constructed radius and unit constant.
pub fn certify_i_function(table: &IFunctionTable) -> BoundReport {
    let mut flat: Vec<(Vec<i64>, Q)> = Vec::new();
    for (beta, r) in &table.summands {
        let entry = r.scale_chow(&euler_class());
        let mut max = Q::from(num_bigint::BigInt::from(0));
        for (_, chow) in entry.iter() {
            for (_, coeff) in chow.iter() {
                let a = if coeff < &Q::from(num_bigint::BigInt::from(0)) {
                    -coeff.clone()
                } else {
                    coeff.clone()
                };
                if a > max {
                    max = a;
                }
            }
        }
        flat.push((beta.map(i64::from).to_vec(), max));
    }
    exp_bound_certify(
        flat.iter().map(|(v, c)| (v, c)),
        &Q::one(),
        &stirling_radius(),
    )
}
