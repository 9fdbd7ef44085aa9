//! Flat key-value run configuration with command-line overrides.

use std::path::{Path, PathBuf};

use crate::CliError;

/// Stage orders, output controls and convention overrides.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Truncation grade for the product expansions.
    pub mirror_truncation: i64,
    /// Total class grade for the hypergeometric table.
    pub i_grade: u32,
    /// Theta evaluation tolerance.
    pub theta_tol: f64,
    /// Truncation grade for the symmetric-locus bridge series.
    pub bridge_order: i64,
    /// Order of the section-count series.
    pub section_order: i64,
    /// Output directory for artifacts.
    pub out: Option<PathBuf>,
    pub emit_json: bool,
    pub emit_csv: bool,
    pub emit_svg: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mirror_truncation: 20,
            i_grade: 5,
            theta_tol: 1e-30,
            bridge_order: 100,
            section_order: 10,
            out: None,
            emit_json: true,
            emit_csv: false,
            emit_svg: false,
        }
    }
}

fn parse_flag(value: &str, key: &str) -> Result<bool, CliError> {
    match value {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(CliError::Usage(format!("invalid boolean for {key}: {value}"))),
    }
}

impl RunConfig {
    /// Parses `key = value` lines; `#` starts a comment, blank lines are
    /// skipped, unknown keys are usage errors.
    pub fn from_str(text: &str) -> Result<Self, CliError> {
        let mut config = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("line {}: expected key = value", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| CliError::Usage(format!("invalid {what} for {key}: {value}"));
            match key {
                "mirror_truncation" => {
                    config.mirror_truncation = value.parse().map_err(|_| bad("integer"))?
                }
                "i_grade" => config.i_grade = value.parse().map_err(|_| bad("integer"))?,
                "theta_tol" => config.theta_tol = value.parse().map_err(|_| bad("number"))?,
                "bridge_order" => config.bridge_order = value.parse().map_err(|_| bad("integer"))?,
                "section_order" => {
                    config.section_order = value.parse().map_err(|_| bad("integer"))?
                }
                "out" => config.out = Some(PathBuf::from(value)),
                "emit_json" => config.emit_json = parse_flag(value, key)?,
                "emit_csv" => config.emit_csv = parse_flag(value, key)?,
                "emit_svg" => config.emit_svg = parse_flag(value, key)?,
                _ => return Err(CliError::Usage(format!("unknown configuration key: {key}"))),
            }
        }
        config.validate()?;
        Ok(config)
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::from_str(&text)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.mirror_truncation <= 0 || self.bridge_order <= 0 || self.section_order < 0 {
            return Err(CliError::Usage("orders must be positive".into()));
        }
        if !(self.theta_tol > 0.0) {
            return Err(CliError::Usage("theta tolerance must be positive".into()));
        }
        Ok(())
    }
}
