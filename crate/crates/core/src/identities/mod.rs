//! Identity catalog and the verification engine.
//!
//! Every entry pairs a brute-force left-hand side (a convolution sum,
//! possibly premultiplied by a normalizer) with a closed-form right-hand
//! side. Checking a cell `(r, n)` compares the two exactly.

mod carlitz;
mod catalog;
mod convolve;
mod entry;
mod four_sum;
mod horadam;
mod report;
mod sweep;

pub use carlitz::{carlitz_rhs, CarlitzVariant};
pub use catalog::Catalog;
pub use convolve::{convolve, weighted_convolve};
pub use entry::{check_identity, CheckResult, EvalError, Guard, IdentityEntry, Provenance, ScalarDomain, Side, Status};
pub use four_sum::{four_sum_check, four_sum_sides, FourSumParams};
pub use horadam::{gamma_general, horadam_conv_rhs, HoradamPair};
pub use report::{write_records, CheckRecord, ReportFormat};
pub use sweep::{sweep, sweep_with, SweepOptions, SweepReport, Tally};

use thiserror::Error;

use crate::exactmath::ArithError;

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("parameter {0} must be non-zero")]
    ZeroParameter(&'static str),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("report output: {0}")]
    Io(#[from] std::io::Error),
    #[error("report output: {0}")]
    Csv(#[from] csv::Error),
    #[error("report output: {0}")]
    Json(#[from] serde_json::Error),
}
