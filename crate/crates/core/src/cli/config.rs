use std::ops::RangeInclusive;
use std::path::Path;

use serde::Deserialize;

use crate::identities::ReportFormat;

use super::CliError;

/// Parses `a..b` (inclusive, either bound may be negative) or a single `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, CliError> {
    let bad = || CliError::Range(s.to_string());
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            (
                lo.trim().parse().map_err(|_| bad())?,
                hi.trim().parse().map_err(|_| bad())?,
            )
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

pub fn show_range(r: &RangeInclusive<i64>) -> String {
    format!("{}..{}", r.start(), r.end())
}

/// Sweep selection read from a TOML file. Every key is optional; command
/// line flags take precedence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub all: Option<bool>,
    pub tag: Option<String>,
    pub ids: Option<Vec<String>>,
    pub r: Option<String>,
    pub n: Option<String>,
    pub format: Option<String>,
    pub fail_fast: Option<bool>,
    pub workers: Option<usize>,
    pub no_header: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    pub fn format(&self) -> Result<Option<ReportFormat>, CliError> {
        self.format
            .as_deref()
            .map(|f| f.parse().map_err(CliError::Config))
            .transpose()
    }
}
