//! Exact scalar arithmetic: rationals, quadratic extensions, dense
//! polynomials, and the tagged [`ExactScalar`] that identity evaluation runs on.

mod exact;
mod geometric;
mod poly;
mod quad;
pub mod scalar;

pub use exact::{ExactScalar, RenderedValue, ScalarKind};
pub use geometric::geom_ratio_sum;
pub use poly::Polynomial;
pub use quad::QuadExt;
pub use scalar::{pow_i64, ExactDiv, Field, Ring};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient does not exist in the ring")]
    InexactDivision,
    #[error("radicand mismatch: sqrt({0}) vs sqrt({1})")]
    RadicandMismatch(String, String),
    #[error("radicand {0} is a perfect square")]
    SquareRadicand(String),
    #[error("cannot combine {0} and {1} values")]
    VariantMismatch(ScalarKind, ScalarKind),
}
