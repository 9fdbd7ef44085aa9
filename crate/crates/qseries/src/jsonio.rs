//! JSON serialization for series.
//!
//! Schema:
//! ```json
//! { "lattice": { "labels": [...], "weights": [...] },
//!   "truncation": N,
//!   "terms": [ { "exp": [...], "coeff": "p/q" }, ... ] }
//! ```
//! Terms are sorted lexicographically by exponent; coefficients are reduced
//! fraction strings (the denominator is omitted when it is one).

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{ExponentLattice, Q, QSeries, SeriesError};

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    labels: Vec<String>,
    weights: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i64>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    lattice: LatticeJson,
    truncation: i64,
    terms: Vec<TermJson>,
}

/// Serializes a series to the module JSON schema.
pub fn series_to_json(s: &QSeries) -> serde_json::Value {
    let doc = SeriesJson {
        lattice: LatticeJson {
            labels: s.lattice().labels().to_vec(),
            weights: s.lattice().weights().to_vec(),
        },
        truncation: s.truncation(),
        terms: s
            .terms()
            .map(|(v, c)| TermJson {
                exp: v.clone(),
                coeff: c.to_string(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("series serialization")
}

/// Parses a series from the module JSON schema.
///
/// # Errors
/// Fails on malformed structure, exponent rank mismatch, or unparsable
/// coefficient strings.
pub fn series_from_json(value: &serde_json::Value) -> Result<QSeries, SeriesError> {
    let doc: SeriesJson = serde_json::from_value(value.clone())
        .map_err(|e| SeriesError::Malformed(e.to_string()))?;
    let lattice = ExponentLattice::new(doc.lattice.labels, doc.lattice.weights)?;
    let mut out = QSeries::zero(lattice.clone(), doc.truncation);
    for term in doc.terms {
        let coeff = Q::from_str(&term.coeff)
            .map_err(|e| SeriesError::Malformed(format!("coefficient {:?}: {e}", term.coeff)))?;
        let mono = QSeries::monomial(lattice.clone(), doc.truncation, term.exp, coeff)?;
        out = out.add(&mono)?;
    }
    Ok(out)
}
