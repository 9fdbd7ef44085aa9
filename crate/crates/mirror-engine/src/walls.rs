//! Wall data consumed by the enumeration.
//!
//! Wall counts are inputs, not derived here: tangency-1 counts come from the
//! section-count series and tangency-2 counts from the hypergeometric
//! pipeline. A wall entry applies to every ray of its residue class, matching
//! the translation symmetry of the base.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

type Q = BigRational;

/// A tangency-1 wall monomial `count * z^{S + fibre_steps * F}` attached to
/// every height-one ray with x-coordinate congruent to `ray_residue` mod 4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tangency1Wall {
    /// Ray residue class mod 4 at height one.
    pub ray_residue: u8,
    /// Abstract section identifier.
    pub section: String,
    /// The k of `S + kF`.
    pub fibre_steps: u32,
    /// Exact curve count.
    pub count: Q,
}

/// A tangency-2 wall monomial attached to every height-two ray with
/// x-coordinate congruent to `ray_residue` mod 8.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tangency2Wall {
    /// Ray residue class mod 8 at height two.
    pub ray_residue: u8,
    /// Abstract bisection identifier.
    pub section: String,
    /// The k of `S + kF`.
    pub fibre_steps: u32,
    /// Exact curve count.
    pub count: Q,
}

/// The full wall table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallTable {
    pub tangency1: Vec<Tangency1Wall>,
    pub tangency2: Vec<Tangency2Wall>,
}

impl WallTable {
    /// The empty table: every pair of broken lines must be unbent.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.tangency1.is_empty() && self.tangency2.is_empty()
    }

    /// Tangency-1 entries whose residue class contains the ray through (r, 1).
    pub fn tangency1_at(&self, r: i64) -> impl Iterator<Item = &Tangency1Wall> {
        let residue = r.rem_euclid(4) as u8;
        self.tangency1
            .iter()
            .filter(move |w| w.ray_residue == residue)
    }

    /// Tangency-2 entries whose residue class contains the ray through (u, 2).
    pub fn tangency2_at(&self, u: i64) -> impl Iterator<Item = &Tangency2Wall> {
        let residue = u.rem_euclid(8) as u8;
        self.tangency2
            .iter()
            .filter(move |w| w.ray_residue == residue)
    }

    /// Largest fibre step present, used for loop bounds.
    pub fn max_fibre_steps(&self) -> u32 {
        self.tangency1
            .iter()
            .map(|w| w.fibre_steps)
            .chain(self.tangency2.iter().map(|w| w.fibre_steps))
            .max()
            .unwrap_or(0)
    }
}
