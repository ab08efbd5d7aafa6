//! Exact evaluation of second-order recurrence sequences and Chebyshev
//! polynomials, and pointwise verification of convolution identities between
//! them against a brute-force summation oracle.
//!
//! The numeric core is generic over the scalar ([`exactmath::Ring`],
//! [`exactmath::Field`]); the aliases below pin it to exact rationals.

pub mod chebyshev;
pub mod cli;
pub mod exactmath;
pub mod identities;
pub mod sequences;
pub mod weights;

/// Unbounded rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;
/// Element of `Q(√d)`.
pub type Quad = exactmath::QuadExt<Rational>;
/// Polynomial with rational coefficients.
pub type Poly = exactmath::Polynomial<Rational>;
/// Rational-valued Horadam sequence.
pub type Horadam = sequences::HoradamSeq<Rational>;
/// Rational Horadam parameters.
pub type Params = sequences::HoradamParams<Rational>;
/// Chebyshev polynomial tables over the rationals.
pub type ChebyshevTable = chebyshev::Chebyshev<Rational>;

pub use exactmath::{ExactScalar, ScalarKind};
