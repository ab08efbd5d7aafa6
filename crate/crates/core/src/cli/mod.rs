//! Command-line front end: `list`, `verify`, `eval`, `conv` and `cheb`.
//!
//! Exit codes: 0 when every checked cell passes (skips allowed), 1 when at
//! least one fails, 2 on usage or configuration errors.

mod args;
mod config;
mod run;

use std::ops::RangeInclusive;

use thiserror::Error;

pub use args::Cli;
pub use config::{parse_range, FileConfig};
pub use run::{main_with, run};

use crate::chebyshev::ChebKind;
use crate::identities::{IdentityError, ReportFormat};
use crate::weights::WeightFamily;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "SEQCONV_WORKERS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed range `{0}` (expected a..b with a <= b)")]
    Range(String),
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error(transparent)]
    Sequence(#[from] crate::sequences::SeqError),
    #[error(transparent)]
    Weight(#[from] crate::weights::WeightError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Which catalog entries a sweep covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    /// Every theorem-derived entry.
    All,
    Tag(String),
    Ids(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub selector: Selector,
    pub r: RangeInclusive<i64>,
    pub n: RangeInclusive<i64>,
    pub format: ReportFormat,
    pub fail_fast: bool,
    pub workers: usize,
    pub header: bool,
}

/// Where a sequence comes from on the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum SequenceSpec {
    Named(crate::sequences::NamedSequence),
    /// `(a, b, p, q)`.
    Custom(Box<[crate::Rational; 4]>),
}

/// A fully resolved invocation.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum CliConfig {
    List {
        tag: Option<String>,
        format: ReportFormat,
    },
    Verify(VerifyConfig),
    Eval {
        sequence: SequenceSpec,
        index: i64,
        binet: bool,
    },
    Conv {
        x: SequenceSpec,
        y: SequenceSpec,
        r: i64,
        n: i64,
        weight: Option<WeightFamily>,
    },
    Cheb {
        kind: ChebKind,
        degree: i64,
        at: Option<crate::Rational>,
    },
}
