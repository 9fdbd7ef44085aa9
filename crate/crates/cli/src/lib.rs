//! Pipeline orchestration for the command-line entry point.
//!
//! - `config`: flat key-value run configuration with flag overrides.
//! - `output`: deterministic JSON, CSV and SVG artifact emission with
//!   provenance tags on every number.
//! - `verify`: the full acceptance suite, one named check per criterion.

pub mod config;
pub mod output;
pub mod verify;

pub use config::RunConfig;
pub use output::Provenance;
pub use verify::{run_all, CriterionResult};

/// Errors raised by the command-line layer, mapped to distinct exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    /// Exit code: 2 usage, 3 verification failure, 4 internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}
