//! Exponential coefficient bounds and their closure certificates.
//!
//! A coefficient table `{v -> a_v}` is exponentially bounded for constants
//! `(c, r)` when `|a_v| <= c * r^diag(v)` with `diag(v) = sum_i (v_i + 1)`.
//! Such a bound yields a sup bound `M` on the closed polydisc of radius
//! `rho = 1/(2r)`, and sup bounds are closed under products, exponentials,
//! inverses of units and unit substitutions; the Cauchy integral formula turns
//! a sup bound back into a coefficient bound. [`SupCertificate`] tracks the
//! pair `(M, rho)` through those operations with exact rational arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Q, QSeries};

/// Outcome of checking `|a_v| <= c * r^diag(v)` over a coefficient table.
#[derive(Clone, Debug)]
pub struct BoundReport {
    /// Whether every coefficient satisfied the bound.
    pub pass: bool,
    /// Exponent vectors (with coefficients) that violated the bound.
    pub failures: Vec<(Vec<i64>, Q)>,
    /// Number of coefficients checked.
    pub checked: usize,
    /// Smallest r that would certify the table at the given c, as a float
    /// (informational; the pass/fail verdict is exact).
    pub empirical_minimal_r: f64,
}

fn diag(v: &[i64]) -> i64 {
    v.iter().map(|x| x + 1).sum()
}

fn qpow(base: &Q, e: i64) -> Q {
    num_traits::Pow::pow(base, i32::try_from(e).expect("exponent fits"))
}

/// Checks `|a_v| <= c * r^diag(v)` for every entry of the table. Exact
/// comparison; an empty table passes vacuously.
pub fn exp_bound_certify<'a>(
    table: impl IntoIterator<Item = (&'a Vec<i64>, &'a Q)>,
    c: &Q,
    r: &Q,
) -> BoundReport {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    let mut min_r: f64 = 0.0;
    for (v, a) in table {
        checked += 1;
        let d = diag(v);
        let bound = c * qpow(r, d);
        let mag = a.abs();
        if mag > bound {
            failures.push((v.clone(), a.clone()));
        }
        if !mag.is_zero() && d != 0 {
            let ratio = (mag / c).to_f64().unwrap_or(f64::INFINITY);
            let candidate = ratio.powf(1.0 / d as f64);
            if candidate > min_r {
                min_r = candidate;
            }
        }
    }
    BoundReport {
        pass: failures.is_empty(),
        failures,
        checked,
        empirical_minimal_r: min_r,
    }
}

/// Checks a [`QSeries`] coefficient table against `(c, r)`.
pub fn certify_series(s: &QSeries, c: &Q, r: &Q) -> BoundReport {
    exp_bound_certify(s.terms(), c, r)
}

fn qceil(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

/// A polydisc sup bound: `|f| <= M` on `max_i |x_i| <= rho`, for a power
/// series in `vars` variables with nonnegative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupCertificate {
    /// Sup bound on the polydisc.
    pub bound: Q,
    /// Polydisc radius, in (0, 1].
    pub radius: Q,
    /// Number of variables.
    pub vars: usize,
}

impl SupCertificate {
    /// From a coefficient bound `|a_v| <= c * r^diag(v)` (with `r >= 1`):
    /// on `rho = 1/(2r)` the series is dominated by
    /// `c * r^n * sum_v 2^{-sum v_i} = c * (2r)^n`.
    pub fn from_coefficient_bound(c: &Q, r: &Q, vars: usize) -> Self {
        assert!(*r >= Q::one(), "coefficient ratio must be at least one");
        let two = Q::from(BigInt::from(2));
        Self {
            bound: c * qpow(&(&two * r), vars as i64),
            radius: (&two * r).recip(),
            vars,
        }
    }

    fn common_radius(&self, other: &Self) -> Q {
        if self.radius <= other.radius {
            self.radius.clone()
        } else {
            other.radius.clone()
        }
    }

    /// Certificate for a product.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        Self {
            bound: &self.bound * &other.bound,
            radius: self.common_radius(other),
            vars: self.vars,
        }
    }

    /// Certificate for `exp(f)` where `f` has zero constant term:
    /// `|exp(f)| <= e^M <= 3^ceil(M)`.
    pub fn exp(&self) -> Self {
        let e = qceil(&self.bound).max(BigInt::one());
        let e = e.to_u32().expect("exponent fits");
        Self {
            bound: qpow(&Q::from(BigInt::from(3)), i64::from(e.max(1))),
            radius: self.radius.clone(),
            vars: self.vars,
        }
    }

    /// Certificate for `1 / (c0 + g)` where this certificate bounds the
    /// zero-constant-term part `g` and `c0` is the unit's constant term.
    /// Shrinks the radius so that `|g| <= |c0| / 2` (Schwarz lemma), giving
    /// `|1/(c0 + g)| <= 2 / |c0|`.
    pub fn inverse_unit(&self, c0: &Q) -> Self {
        assert!(!c0.is_zero(), "inverse of a non-unit");
        let c0a = c0.abs();
        let lambda = if self.bound.is_zero() {
            Q::one()
        } else {
            let l = &c0a / (Q::from(BigInt::from(2)) * &self.bound);
            if l > Q::one() {
                Q::one()
            } else {
                l
            }
        };
        Self {
            bound: Q::from(BigInt::from(2)) / c0a,
            radius: &self.radius * lambda,
            vars: self.vars,
        }
    }

    /// Certificate for the substitution `x_i -> x_i * f_i` applied to the
    /// series this certificate bounds, where `mults[i]` bounds `f_i`. The
    /// radius shrinks so that every `|x_i f_i|` stays inside this
    /// certificate's polydisc.
    pub fn substitute(&self, mults: &[SupCertificate]) -> Self {
        assert_eq!(mults.len(), self.vars);
        let mut radius = self.radius.clone();
        for m in mults {
            if m.radius < radius {
                radius = m.radius.clone();
            }
            let allowed = if m.bound > Q::one() {
                &self.radius / &m.bound
            } else {
                self.radius.clone()
            };
            if allowed < radius {
                radius = allowed;
            }
        }
        Self {
            bound: self.bound.clone(),
            radius,
            vars: self.vars,
        }
    }

    /// Converts back to a coefficient bound `(c', r')` with
    /// `|a_v| <= c' * r'^diag(v)` via the Cauchy integral formula:
    /// `|a_v| <= M / rho^{sum v_i} <= M * (1/rho)^{diag(v)}` for `rho <= 1`.
    pub fn coefficient_bound(&self) -> (Q, Q) {
        let inv = self.radius.clone().recip();
        let r = if inv > Q::one() { inv } else { Q::one() };
        (self.bound.clone(), r)
    }
}
