//! Truncated multivariate series over an exponent lattice.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::{qint, ExponentLattice, Q, SeriesError};

/// A formal series truncated by total grade: a finite map from exponent
/// vectors to nonzero exact rationals, every stored exponent having grade at
/// most `truncation`.
///
/// Exponents are signed; the grading weights are nonnegative, so negative
/// exponents can carry negative grades. Equality is termwise up to the stored
/// truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    lattice: ExponentLattice,
    truncation: i64,
    terms: BTreeMap<Vec<i64>, Q>,
}

impl QSeries {
    /// The zero series.
    pub fn zero(lattice: ExponentLattice, truncation: i64) -> Self {
        Self {
            lattice,
            truncation,
            terms: BTreeMap::new(),
        }
    }

    /// The constant series 1.
    pub fn one(lattice: ExponentLattice, truncation: i64) -> Self {
        let rank = lattice.rank();
        let mut s = Self::zero(lattice, truncation);
        s.terms.insert(vec![0; rank], Q::one());
        s
    }

    /// A constant series.
    pub fn constant(lattice: ExponentLattice, truncation: i64, c: Q) -> Self {
        let rank = lattice.rank();
        let mut s = Self::zero(lattice, truncation);
        if !c.is_zero() {
            s.terms.insert(vec![0; rank], c);
        }
        s
    }

    /// A single monomial `c * x^v`, dropped silently when its grade exceeds
    /// the truncation.
    ///
    /// # Errors
    /// Fails when the exponent length does not match the lattice rank.
    pub fn monomial(
        lattice: ExponentLattice,
        truncation: i64,
        exp: Vec<i64>,
        coeff: Q,
    ) -> Result<Self, SeriesError> {
        let grade = lattice.grade(&exp)?;
        let mut s = Self::zero(lattice, truncation);
        if !coeff.is_zero() && grade <= truncation {
            s.terms.insert(exp, coeff);
        }
        Ok(s)
    }

    pub fn lattice(&self) -> &ExponentLattice {
        &self.lattice
    }

    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of an exponent vector (zero when absent).
    pub fn coeff(&self, exp: &[i64]) -> Q {
        self.terms.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    /// Constant-term coefficient.
    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.lattice.rank()])
    }

    /// Iterates terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Q)> {
        self.terms.iter()
    }

    /// Restricts to terms of grade at most `m` and lowers the truncation.
    pub fn truncate(&self, m: i64) -> Self {
        let m = m.min(self.truncation);
        let terms = self
            .terms
            .iter()
            .filter(|(v, _)| self.lattice.grade(v).expect("stored exponent") <= m)
            .map(|(v, c)| (v.clone(), c.clone()))
            .collect();
        Self {
            lattice: self.lattice.clone(),
            truncation: m,
            terms,
        }
    }

    /// Smallest grade among stored terms, when any.
    pub fn min_grade(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|v| self.lattice.grade(v).expect("stored exponent"))
            .min()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.lattice != other.lattice {
            return Err(SeriesError::LatticeMismatch(format!(
                "{:?} vs {:?}",
                self.lattice.labels(),
                other.lattice.labels()
            )));
        }
        Ok(())
    }

    fn insert_many(&mut self, items: impl IntoIterator<Item = (Vec<i64>, Q)>) {
        for (exp, c) in items {
            if c.is_zero() {
                continue;
            }
            let grade = self.lattice.grade(&exp).expect("rank-checked exponent");
            if grade > self.truncation {
                continue;
            }
            let entry = self.terms.entry(exp).or_insert_with(Q::zero);
            *entry += c;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    /// Sum; result truncation is the minimum of the operands'.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let trunc = self.truncation.min(other.truncation);
        let mut out = Self::zero(self.lattice.clone(), trunc);
        out.insert_many(self.terms.iter().map(|(v, c)| (v.clone(), c.clone())));
        out.insert_many(other.terms.iter().map(|(v, c)| (v.clone(), c.clone())));
        Ok(out)
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero(self.lattice.clone(), self.truncation);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= s;
        }
        out
    }

    /// Cauchy product; result truncation is the minimum of the operands'.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let trunc = self.truncation.min(other.truncation);
        let mut out = Self::zero(self.lattice.clone(), trunc);
        let mut acc: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
        for (va, ca) in &self.terms {
            let ga = self.lattice.grade(va).expect("stored exponent");
            for (vb, cb) in &other.terms {
                let gb = other.lattice.grade(vb).expect("stored exponent");
                if ga + gb > trunc {
                    continue;
                }
                let exp: Vec<i64> = va.iter().zip(vb).map(|(a, b)| a + b).collect();
                let entry = acc.entry(exp).or_insert_with(Q::zero);
                *entry += ca * cb;
            }
        }
        out.insert_many(acc);
        Ok(out)
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, n: u32) -> Result<Self, SeriesError> {
        let mut out = Self::one(self.lattice.clone(), self.truncation);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Exponential `sum a^n / n!`.
    ///
    /// # Errors
    /// Fails unless every term of `a` has positive grade (in particular the
    /// constant term must vanish), which guarantees termination.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Ok(Self::one(self.lattice.clone(), self.truncation));
        }
        let min = self.min_grade().expect("nonzero series");
        if min <= 0 {
            return Err(if self.constant_term().is_zero() {
                SeriesError::NonPositiveGrade
            } else {
                SeriesError::NonzeroConstant
            });
        }
        let mut out = Self::one(self.lattice.clone(), self.truncation);
        let mut term = Self::one(self.lattice.clone(), self.truncation);
        let mut k: i64 = 0;
        while !term.is_zero() && k * min <= self.truncation {
            k += 1;
            term = term.mul(self)?.scale(&(qint(1) / qint(k)));
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Multiplicative inverse of a unit.
    ///
    /// # Errors
    /// Fails when the constant term is zero, or when a non-constant term has
    /// non-positive grade (the geometric expansion would not terminate).
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstant);
        }
        let rank = self.lattice.rank();
        let tail = {
            let mut t = self.scale(&(Q::one() / &c0));
            t.terms.remove(&vec![0i64; rank]);
            t.neg()
        };
        if let Some(min) = tail.min_grade() {
            if min <= 0 {
                return Err(SeriesError::NonPositiveGrade);
            }
            let mut out = Self::one(self.lattice.clone(), self.truncation);
            let mut pw = Self::one(self.lattice.clone(), self.truncation);
            let mut k: i64 = 0;
            while !pw.is_zero() && k * min <= self.truncation {
                k += 1;
                pw = pw.mul(&tail)?;
                out = out.add(&pw)?;
            }
            Ok(out.scale(&(Q::one() / &c0)))
        } else {
            Ok(Self::constant(
                self.lattice.clone(),
                self.truncation,
                Q::one() / c0,
            ))
        }
    }

    /// Substitution `x_i -> x_i * f_i` for unit multipliers `f_i` on the same
    /// lattice: each monomial `c x^v` becomes `c x^v prod_i f_i^{v_i}`.
    ///
    /// # Errors
    /// Fails when a multiplier is missing, lives on another lattice, or is not
    /// a unit.
    pub fn substitute(&self, multipliers: &[QSeries]) -> Result<Self, SeriesError> {
        let rank = self.lattice.rank();
        if multipliers.len() != rank {
            return Err(SeriesError::RankMismatch {
                got: multipliers.len(),
                want: rank,
            });
        }
        for f in multipliers {
            self.check_compatible(f)?;
            if f.constant_term().is_zero() {
                return Err(SeriesError::NonUnitMultiplier);
            }
        }
        let trunc = multipliers
            .iter()
            .map(|f| f.truncation)
            .fold(self.truncation, i64::min);
        let mut out = Self::zero(self.lattice.clone(), trunc);
        let mut pos_pows: Vec<Vec<QSeries>> = Vec::with_capacity(rank);
        let mut neg_pows: Vec<Vec<QSeries>> = Vec::with_capacity(rank);
        for f in multipliers {
            pos_pows.push(vec![Self::one(self.lattice.clone(), trunc)]);
            neg_pows.push(vec![f.inverse()?.truncate(trunc)]);
        }
        for (v, c) in &self.terms {
            let mut factor = Self::monomial(self.lattice.clone(), trunc, v.clone(), c.clone())?;
            if factor.is_zero() {
                continue;
            }
            for (i, &e) in v.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let f = if e > 0 {
                    let pows = &mut pos_pows[i];
                    let k = e as usize;
                    while pows.len() <= k {
                        let next = pows.last().unwrap().mul(&multipliers[i])?;
                        pows.push(next);
                    }
                    pows[k].clone()
                } else {
                    let pows = &mut neg_pows[i];
                    let k = (-e) as usize;
                    while pows.len() < k {
                        let next = pows.last().unwrap().mul(&pows[0])?;
                        pows.push(next);
                    }
                    pows[k - 1].clone()
                };
                factor = factor.mul(&f)?;
            }
            out = out.add(&factor)?;
        }
        Ok(out)
    }

    /// Largest absolute coefficient value, for diagnostics.
    pub fn max_abs_coeff(&self) -> Q {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Q::zero)
    }
}
