//! Horadam sequences `w_n(a, b; p, q)` over every integer index, the eight
//! named integer sequences, Lucas sequences of both kinds, and a Binet-form
//! evaluator used as an independent check on the recurrence.
//!
//! Note on naming: the seeds of a Horadam sequence are called `a` and `b`
//! here. Elsewhere the same letters are often used for the Pell roots
//! `1 ± √2`; those only appear inside [`binet_at`] as `alpha`/`beta`.

mod binet;
mod horadam;
mod memo;
mod named;

pub use binet::binet_at;
pub use horadam::{lucas_u_at, lucas_v_at, HoradamParams, HoradamSeq, LucasPair};
pub use memo::Recurrence;
pub use named::{make_named, NamedSequence};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("recurrence parameter {0} must be non-zero")]
    ZeroParameter(&'static str),
    #[error("unknown sequence name `{0}`")]
    UnknownSequence(String),
    #[error("discriminant p^2 - 4q vanishes; the repeated-root case is not supported")]
    DegenerateDiscriminant,
    #[error(transparent)]
    Arith(#[from] crate::exactmath::ArithError),
}
