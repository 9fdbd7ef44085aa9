//! Enumeration of pairs of broken lines meeting at a point.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use affine_base::{phi, UCoverPoint};
use qseries::{QSeries, Q};

use crate::walls::WallTable;
use crate::{mirror_lattice, EngineError};

/// Named output generator of a product expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OutputName {
    /// Coefficient of the height-two generator 2 D_i, i in 1..=4.
    TwoD(usize),
    /// Coefficient of the primitive generator D_i, i in 1..=4.
    OneD(usize),
    /// Constant term.
    Constant,
}

/// A bend of a broken line at a wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BendEvent {
    /// Ray the bend happens on: x-coordinate and height (1 or 2).
    pub ray: (i64, u8),
    /// Section tag of the wall monomial used.
    pub section: String,
    /// Fibre steps of the wall monomial.
    pub fibre_steps: u32,
    /// Count carried by the wall monomial.
    pub count: Q,
}

/// One broken line of a pair: its asymptotic direction and its bends in
/// travel order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenLine {
    /// Asymptotic direction (k, 1).
    pub direction: i64,
    pub bends: Vec<BendEvent>,
}

impl BrokenLine {
    fn straight(direction: i64) -> Self {
        Self {
            direction,
            bends: Vec::new(),
        }
    }
}

/// A pair of broken lines meeting near the target, with its contribution
/// `coeff * z^exponent` to the target's coefficient series. The exponent is
/// on [`mirror_lattice`] and already includes the `-phi(target)`
/// normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOfPants {
    pub line_p: BrokenLine,
    pub line_q: BrokenLine,
    /// Target point (x, height); height 0 encodes the constant output.
    pub target: (i64, i64),
    pub output: OutputName,
    pub coeff: Q,
    pub exponent: Vec<i64>,
}

fn phi_vec(x: i64, y: i64) -> [i64; 4] {
    let p = UCoverPoint::new(
        BigRational::from(BigInt::from(x)),
        BigRational::from(BigInt::from(y)),
    )
    .expect("positive height");
    phi(&p)
        .integer_coeffs()
        .expect("integral potential value at integral point")
}

/// Precomputed potential values on a window of integral points, so the inner
/// enumeration loops stay in machine integers.
struct PhiCache {
    lo1: i64,
    h1: Vec<[i64; 4]>,
    lo2: i64,
    h2: Vec<[i64; 4]>,
}

impl PhiCache {
    fn new(h1_range: std::ops::RangeInclusive<i64>, h2_range: std::ops::RangeInclusive<i64>) -> Self {
        let (lo1, hi1) = (*h1_range.start(), *h1_range.end());
        let (lo2, hi2) = (*h2_range.start(), *h2_range.end());
        Self {
            lo1,
            h1: (lo1..=hi1).map(|k| phi_vec(k, 1)).collect(),
            lo2,
            h2: (lo2..=hi2).map(|u| phi_vec(u, 2)).collect(),
        }
    }

    fn p1(&self, k: i64) -> &[i64; 4] {
        &self.h1[(k - self.lo1) as usize]
    }

    fn p2(&self, u: i64) -> &[i64; 4] {
        &self.h2[(u - self.lo2) as usize]
    }
}

fn grade4(v: &[i64; 4]) -> i64 {
    v.iter().sum()
}

fn add4(a: [i64; 4], b: &[i64; 4]) -> [i64; 4] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn sub4(a: [i64; 4], b: &[i64; 4]) -> [i64; 4] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

fn isqrt(n: i64) -> i64 {
    (n.max(0) as f64).sqrt() as i64 + 1
}

fn strictly_between(r: i64, a: i64, b: i64) -> bool {
    (a < r && r < b) || (b < r && r < a)
}

fn make_exponent(d: [i64; 4], fibre_steps: i64, sections: i64) -> Vec<i64> {
    vec![
        d[0] + fibre_steps,
        d[1] + fibre_steps,
        d[2] + fibre_steps,
        d[3] + fibre_steps,
        sections,
    ]
}

fn output_of_target(tx: i64, ty: i64) -> OutputName {
    match ty {
        2 => OutputName::TwoD(((tx / 2).rem_euclid(4) + 1) as usize),
        1 => OutputName::OneD((tx.rem_euclid(4) + 1) as usize),
        _ => OutputName::Constant,
    }
}

/// Enumerates all pairs of broken lines from direction classes `p_residue`
/// and `q_residue` (mod 4, height one) contributing to the theta generator at
/// `target`, with total exponent grade at most `truncation`.
///
/// The target height selects the shape: height two admits only unbent pairs,
/// height one pairs with a single tangency-1 bend, and height zero (the
/// constant output; the x-entry of the target is ignored and an endpoint near
/// `endpoint_times_3 / 3` is used) the three remaining shapes.
///
/// # Errors
/// Fails for `truncation < 1` or when an enumerated pair carries a
/// non-effective exponent.
pub fn enumerate_pairs(
    p_residue: u8,
    q_residue: u8,
    target: (i64, i64),
    walls: &WallTable,
    truncation: i64,
    endpoint_times_3: i64,
) -> Result<Vec<PairOfPants>, EngineError> {
    if truncation < 1 {
        return Err(EngineError::TruncationTooSmall(truncation));
    }
    let mut out = Vec::new();
    match target.1 {
        2 => unbent_pairs(p_residue, q_residue, target, truncation, &mut out)?,
        1 => single_bend_pairs(p_residue, q_residue, target, walls, truncation, &mut out)?,
        0 => constant_pairs(
            p_residue,
            q_residue,
            walls,
            truncation,
            endpoint_times_3,
            &mut out,
        )?,
        other => {
            return Err(EngineError::NonEffectiveExponent {
                exponent: vec![],
                tx: target.0,
                ty: other,
            })
        }
    }
    for pair in &out {
        if pair.exponent.iter().any(|&e| e < 0) {
            return Err(EngineError::NonEffectiveExponent {
                exponent: pair.exponent.clone(),
                tx: target.0,
                ty: target.1,
            });
        }
    }
    out.sort_by(|a, b| {
        (a.exponent.clone(), a.line_p.direction, a.line_q.direction).cmp(&(
            b.exponent.clone(),
            b.line_p.direction,
            b.line_q.direction,
        ))
    });
    Ok(out)
}

fn unbent_pairs(
    p_residue: u8,
    q_residue: u8,
    target: (i64, i64),
    truncation: i64,
    out: &mut Vec<PairOfPants>,
) -> Result<(), EngineError> {
    if (target.0 - i64::from(p_residue) - i64::from(q_residue)).rem_euclid(4) != 0 {
        return Ok(());
    }
    let phi_target = phi_vec(target.0, 2);
    let mut emit = |n: i64| -> i64 {
        let a = i64::from(p_residue) + 4 * n;
        let b = target.0 - a;
        let d = sub4(add4(phi_vec(a, 1), &phi_vec(b, 1)), &phi_target);
        let grade = grade4(&d);
        if grade <= truncation {
            out.push(PairOfPants {
                line_p: BrokenLine::straight(a),
                line_q: BrokenLine::straight(b),
                target,
                output: output_of_target(target.0, 2),
                coeff: Q::one(),
                exponent: make_exponent(d, 0, 0),
            });
        }
        grade
    };
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        let mut exceeded = 0;
        loop {
            let grade = emit(n);
            exceeded = if grade > truncation { exceeded + 1 } else { 0 };
            if exceeded >= 3 {
                break;
            }
            n += dir;
        }
    }
    Ok(())
}

fn scan_limit(truncation: i64) -> i64 {
    truncation + 4 * isqrt(2 * truncation) + 16
}

fn single_bend_pairs(
    p_residue: u8,
    q_residue: u8,
    target: (i64, i64),
    walls: &WallTable,
    truncation: i64,
    out: &mut Vec<PairOfPants>,
) -> Result<(), EngineError> {
    let phi_target = phi_vec(target.0, 1);
    let scan = scan_limit(truncation);
    let cache = PhiCache::new(
        (target.0 - 2 * scan - 4)..=(target.0 + 2 * scan + 4),
        0..=0,
    );
    for bend_on_p in [true, false] {
        let (gamma, delta) = if bend_on_p {
            (i64::from(p_residue), i64::from(q_residue))
        } else {
            (i64::from(q_residue), i64::from(p_residue))
        };
        for wall in &walls.tangency1 {
            let extra_grade = 1 + 4 * i64::from(wall.fibre_steps);
            if extra_grade > truncation {
                continue;
            }
            for r in (target.0 - scan)..=(target.0 + scan) {
                if r.rem_euclid(4) != i64::from(wall.ray_residue) {
                    continue;
                }
                let phi_r = *cache.p1(r);
                for a in (r - scan)..=(r + scan) {
                    if !strictly_between(r, target.0, a) {
                        continue;
                    }
                    if (a - gamma).rem_euclid(4) != 0 {
                        continue;
                    }
                    let b = target.0 + r - a;
                    if (b - delta).rem_euclid(4) != 0 {
                        continue;
                    }
                    let d = sub4(
                        sub4(add4(*cache.p1(a), cache.p1(b)), &phi_r),
                        &phi_target,
                    );
                    let grade = grade4(&d) + extra_grade;
                    if grade > truncation {
                        continue;
                    }
                    let bend = BendEvent {
                        ray: (r, 1),
                        section: wall.section.clone(),
                        fibre_steps: wall.fibre_steps,
                        count: wall.count.clone(),
                    };
                    let (line_p, line_q) = if bend_on_p {
                        (
                            BrokenLine {
                                direction: a,
                                bends: vec![bend],
                            },
                            BrokenLine::straight(b),
                        )
                    } else {
                        (
                            BrokenLine::straight(b),
                            BrokenLine {
                                direction: a,
                                bends: vec![bend],
                            },
                        )
                    };
                    out.push(PairOfPants {
                        line_p,
                        line_q,
                        target,
                        output: output_of_target(target.0, 1),
                        coeff: wall.count.clone(),
                        exponent: make_exponent(d, i64::from(wall.fibre_steps), 1),
                    });
                }
            }
        }
    }
    Ok(())
}

fn constant_pairs(
    p_residue: u8,
    q_residue: u8,
    walls: &WallTable,
    truncation: i64,
    endpoint_times_3: i64,
    out: &mut Vec<PairOfPants>,
) -> Result<(), EngineError> {
    let scan = scan_limit(truncation);
    let e3 = endpoint_times_3;
    let cache = PhiCache::new((-3 * scan - 4)..=(3 * scan + 4), (-scan - 4)..=(scan + 4));
    let between_e = |r: i64, a: i64| -> bool {
        // r strictly between the endpoint e = e3/3 and a
        (3 * r > e3 && 3 * r < 3 * a) || (3 * r < e3 && 3 * r > 3 * a)
    };
    // the bend height of a final climbing segment reaching the endpoint,
    // as the sign-checked ratio num/den in the open interval (0, cap)
    let ratio_in = |num: i64, den: i64, cap_num: i64, cap_den: i64| -> bool {
        den != 0 && num.signum() == den.signum() && cap_den * num.abs() < cap_num * den.abs()
    };
    // one tangency-2 bend
    for bend_on_p in [true, false] {
        let (gamma, delta) = if bend_on_p {
            (i64::from(p_residue), i64::from(q_residue))
        } else {
            (i64::from(q_residue), i64::from(p_residue))
        };
        for wall in &walls.tangency2 {
            let extra_grade = 2 + 4 * i64::from(wall.fibre_steps);
            if extra_grade > truncation {
                continue;
            }
            for u in -scan..=scan {
                if u.rem_euclid(8) != i64::from(wall.ray_residue) {
                    continue;
                }
                let phi_u = *cache.p2(u);
                for a in -scan..=scan {
                    if (a - gamma).rem_euclid(4) != 0 {
                        continue;
                    }
                    let b = u - a;
                    if (b - delta).rem_euclid(4) != 0 {
                        continue;
                    }
                    // bend height (e - b)/(a - b) must lie in (0, 1/2)
                    if !ratio_in(e3 - 3 * b, 3 * (a - b), 1, 2) {
                        continue;
                    }
                    let d = sub4(add4(*cache.p1(a), cache.p1(b)), &phi_u);
                    let grade = grade4(&d) + extra_grade;
                    if grade > truncation {
                        continue;
                    }
                    let bend = BendEvent {
                        ray: (u, 2),
                        section: wall.section.clone(),
                        fibre_steps: wall.fibre_steps,
                        count: wall.count.clone(),
                    };
                    let (line_p, line_q) = if bend_on_p {
                        (
                            BrokenLine {
                                direction: a,
                                bends: vec![bend],
                            },
                            BrokenLine::straight(b),
                        )
                    } else {
                        (
                            BrokenLine::straight(b),
                            BrokenLine {
                                direction: a,
                                bends: vec![bend],
                            },
                        )
                    };
                    out.push(PairOfPants {
                        line_p,
                        line_q,
                        target: (0, 0),
                        output: OutputName::Constant,
                        coeff: wall.count.clone(),
                        exponent: make_exponent(d, i64::from(wall.fibre_steps), 2),
                    });
                }
            }
        }
    }
    // two tangency-1 bends: on separate lines, or both on one line
    for w1 in &walls.tangency1 {
        for w2 in &walls.tangency1 {
            let extra_grade = 2 + 4 * (i64::from(w1.fibre_steps) + i64::from(w2.fibre_steps));
            if extra_grade > truncation {
                continue;
            }
            let coeff = &w1.count * &w2.count;
            for r1 in -scan..=scan {
                if r1.rem_euclid(4) != i64::from(w1.ray_residue) {
                    continue;
                }
                let phi_r1 = *cache.p1(r1);
                for r2 in -scan..=scan {
                    if r2.rem_euclid(4) != i64::from(w2.ray_residue) {
                        continue;
                    }
                    let phi_r12 = add4(*cache.p1(r2), &phi_r1);
                    for a in -scan..=scan {
                        if (a - i64::from(p_residue)).rem_euclid(4) != 0
                            && (a - i64::from(q_residue)).rem_euclid(4) != 0
                        {
                            continue;
                        }
                        let b = r1 + r2 - a;
                        let d = sub4(add4(*cache.p1(a), cache.p1(b)), &phi_r12);
                        let grade = grade4(&d) + extra_grade;
                        if grade > truncation {
                            continue;
                        }
                        let bend1 = BendEvent {
                            ray: (r1, 1),
                            section: w1.section.clone(),
                            fibre_steps: w1.fibre_steps,
                            count: w1.count.clone(),
                        };
                        let bend2 = BendEvent {
                            ray: (r2, 1),
                            section: w2.section.clone(),
                            fibre_steps: w2.fibre_steps,
                            count: w2.count.clone(),
                        };
                        let exponent = make_exponent(
                            d,
                            i64::from(w1.fibre_steps) + i64::from(w2.fibre_steps),
                            2,
                        );
                        // separate lines: p-line from a bends at r1, q-line from b at r2
                        if (a - i64::from(p_residue)).rem_euclid(4) == 0
                            && (b - i64::from(q_residue)).rem_euclid(4) == 0
                            && between_e(r1, a)
                            && between_e(r2, b)
                        {
                            out.push(PairOfPants {
                                line_p: BrokenLine {
                                    direction: a,
                                    bends: vec![bend1.clone()],
                                },
                                line_q: BrokenLine {
                                    direction: b,
                                    bends: vec![bend2.clone()],
                                },
                                target: (0, 0),
                                output: OutputName::Constant,
                                coeff: coeff.clone(),
                                exponent: exponent.clone(),
                            });
                        }
                        // both bends on the p-line (r1 crossed first), q-line straight
                        if (a - i64::from(p_residue)).rem_euclid(4) == 0
                            && (b - i64::from(q_residue)).rem_euclid(4) == 0
                            && strictly_between(r1, a, r2)
                            && ratio_in(3 * b - e3, 3 * (r1 - a), 1, 1)
                        {
                            out.push(PairOfPants {
                                line_p: BrokenLine {
                                    direction: a,
                                    bends: vec![bend1.clone(), bend2.clone()],
                                },
                                line_q: BrokenLine::straight(b),
                                target: (0, 0),
                                output: OutputName::Constant,
                                coeff: coeff.clone(),
                                exponent: exponent.clone(),
                            });
                        }
                        // both bends on the q-line
                        if (a - i64::from(q_residue)).rem_euclid(4) == 0
                            && (b - i64::from(p_residue)).rem_euclid(4) == 0
                            && strictly_between(r1, a, r2)
                            && ratio_in(3 * b - e3, 3 * (r1 - a), 1, 1)
                        {
                            out.push(PairOfPants {
                                line_p: BrokenLine::straight(b),
                                line_q: BrokenLine {
                                    direction: a,
                                    bends: vec![bend1, bend2],
                                },
                                target: (0, 0),
                                output: OutputName::Constant,
                                coeff: coeff.clone(),
                                exponent,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Coefficient series of one theta product, grouped by output generator.
#[derive(Clone, Debug)]
pub struct ProductCoefficients {
    /// Coefficient series per named output; absent outputs are zero.
    pub by_output: BTreeMap<OutputName, QSeries>,
    /// The enumerated pairs behind the coefficients.
    pub pairs: Vec<PairOfPants>,
}

impl ProductCoefficients {
    /// Coefficient series of a named output (zero when absent).
    pub fn coefficient(&self, name: OutputName, truncation: i64) -> QSeries {
        self.by_output
            .get(&name)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(mirror_lattice(), truncation))
    }
}

/// Expands the product of the primitive generators with direction residues
/// `p_residue` and `q_residue` over all output generators. `endpoint_shift`
/// moves every target lift by that many deck translations; the resulting
/// series must not depend on it.
///
/// # Errors
/// As for [`enumerate_pairs`].
pub fn theta_product_coefficients(
    p_residue: u8,
    q_residue: u8,
    walls: &WallTable,
    truncation: i64,
    endpoint_shift: i64,
) -> Result<ProductCoefficients, EngineError> {
    let lat = mirror_lattice();
    let mut by_output: BTreeMap<OutputName, QSeries> = BTreeMap::new();
    let mut pairs = Vec::new();
    let mut targets: Vec<(i64, i64)> = Vec::new();
    let sum = i64::from(p_residue) + i64::from(q_residue);
    if sum % 2 == 0 {
        targets.push((sum.rem_euclid(8) + 8 * endpoint_shift, 2));
        targets.push(((sum + 4).rem_euclid(8) + 8 * endpoint_shift, 2));
    }
    for rho in 0..4i64 {
        targets.push((rho + 4 * endpoint_shift, 1));
    }
    targets.push((0, 0));
    for target in targets {
        let found = enumerate_pairs(
            p_residue,
            q_residue,
            target,
            walls,
            truncation,
            1 + 12 * endpoint_shift,
        )?;
        for pair in found {
            let mono = QSeries::monomial(
                lat.clone(),
                truncation,
                pair.exponent.clone(),
                pair.coeff.clone(),
            )?;
            let entry = by_output
                .entry(pair.output)
                .or_insert_with(|| QSeries::zero(lat.clone(), truncation));
            *entry = entry.add(&mono)?;
            pairs.push(pair);
        }
    }
    Ok(ProductCoefficients { by_output, pairs })
}
