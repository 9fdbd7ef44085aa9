//! Finite Laurent polynomials in hbar with Chow-ring coefficients.

use std::collections::BTreeMap;

use crate::{ChowElement, Q};

/// A finite map from integer hbar-powers to [`ChowElement`]s. Arithmetic keeps
/// every power whose coefficient is nonzero; an optional floor lets callers
/// discard powers below a stated minimum explicitly rather than silently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HbarLaurent {
    terms: BTreeMap<i32, ChowElement>,
}

impl HbarLaurent {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_term(0, ChowElement::one())
    }

    /// The single term `c * hbar^p`.
    pub fn from_term(p: i32, c: ChowElement) -> Self {
        let mut t = Self::zero();
        if !c.is_zero() {
            t.terms.insert(p, c);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_power(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of hbar^p (zero when absent).
    pub fn coeff(&self, p: i32) -> ChowElement {
        self.terms.get(&p).cloned().unwrap_or_else(ChowElement::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i32, &ChowElement)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            let entry = out.terms.entry(*p).or_insert_with(ChowElement::zero);
            *entry = entry.add(c);
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(p, c)| (*p, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut out = Self {
            terms: self.terms.iter().map(|(p, c)| (*p, c.scale(s))).collect(),
        };
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn scale_chow(&self, s: &ChowElement) -> Self {
        let mut out = Self {
            terms: self.terms.iter().map(|(p, c)| (*p, c.mul(s))).collect(),
        };
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// Product keeping every resulting power.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_floored(other, i32::MIN)
    }

    /// Product discarding powers below `floor`.
    pub fn mul_floored(&self, other: &Self, floor: i32) -> Self {
        let mut out = Self::zero();
        for (pa, ca) in &self.terms {
            for (pb, cb) in &other.terms {
                let p = pa.saturating_add(*pb);
                if p < floor {
                    continue;
                }
                let c = ca.mul(cb);
                if c.is_zero() {
                    continue;
                }
                let entry = out.terms.entry(p).or_insert_with(ChowElement::zero);
                *entry = entry.add(&c);
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}
