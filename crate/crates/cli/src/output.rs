//! Deterministic artifact emission: JSON with provenance metadata, CSV
//! flattening of series, and SVG passthrough.

use std::path::Path;

use num_traits::Signed;
use qseries::{series_to_json, QSeries, Q};
use serde_json::{json, Value};

use crate::CliError;

/// Provenance tag attached to every emitted number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Value anchored to a published display.
    PaperAnchored,
    /// Value computed independently by this pipeline.
    Derived,
    /// Normalization constant measured by the pipeline, not asserted.
    MeasuredConvention,
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::PaperAnchored => "paper-anchored",
            Provenance::Derived => "derived",
            Provenance::MeasuredConvention => "measured-convention",
        }
    }
}

/// Formats a rational as `n/d` (or `n` when the denominator is one).
pub fn rational_string(q: &Q) -> String {
    if q.denom() == &num_bigint::BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// JSON report wrapper carrying a provenance tag in the metadata block.
pub fn tagged_report(subject: &str, provenance: Provenance, body: Value) -> Value {
    json!({
        "metadata": {
            "subject": subject,
            "provenance": provenance.label(),
            "generator": "i4mirror",
        },
        "report": body,
    })
}

/// JSON report for a single series.
pub fn series_report(subject: &str, provenance: Provenance, series: &QSeries) -> Value {
    tagged_report(subject, provenance, series_to_json(series))
}

/// Flattens a series to CSV rows `(exponent..., numerator, denominator)`
/// with a header naming the lattice variables.
pub fn series_to_csv(series: &QSeries) -> String {
    let mut out = String::new();
    for label in series.lattice().labels() {
        out.push_str(label);
        out.push(',');
    }
    out.push_str("numerator,denominator\n");
    for (exp, coeff) in series.terms() {
        for e in exp {
            out.push_str(&e.to_string());
            out.push(',');
        }
        out.push_str(&coeff.numer().to_string());
        out.push(',');
        out.push_str(&coeff.denom().to_string());
        out.push('\n');
    }
    out
}

/// Writes `content` under the output directory, creating it if needed.
pub fn write_artifact(out: &Path, name: &str, content: &str) -> Result<(), CliError> {
    std::fs::create_dir_all(out)
        .map_err(|e| CliError::Internal(format!("cannot create {}: {e}", out.display())))?;
    let path = out.join(name);
    std::fs::write(&path, content)
        .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

/// Serializes a JSON value with stable formatting.
pub fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable value");
    text.push('\n');
    text
}

/// Returns `abs(q)` as a display string for report output.
pub fn abs_string(q: &Q) -> String {
    rational_string(&q.abs())
}
