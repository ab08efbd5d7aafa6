use std::fmt;
use std::str::FromStr;

use super::horadam::{HoradamParams, HoradamSeq};
use super::SeqError;
use crate::Rational;

/// The eight classical sequences, each a Horadam sequence `w(a, b; p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedSequence {
    Fibonacci,
    Lucas,
    Pell,
    PellLucas,
    Jacobsthal,
    JacobsthalLucas,
    Balancing,
    LucasBalancing,
}

impl NamedSequence {
    pub const ALL: [NamedSequence; 8] = [
        NamedSequence::Fibonacci,
        NamedSequence::Lucas,
        NamedSequence::Pell,
        NamedSequence::PellLucas,
        NamedSequence::Jacobsthal,
        NamedSequence::JacobsthalLucas,
        NamedSequence::Balancing,
        NamedSequence::LucasBalancing,
    ];

    /// `(a, b, p, q)`.
    pub fn table(self) -> (i64, i64, i64, i64) {
        match self {
            NamedSequence::Fibonacci => (0, 1, 1, -1),
            NamedSequence::Lucas => (2, 1, 1, -1),
            NamedSequence::Pell => (0, 1, 2, -1),
            NamedSequence::PellLucas => (2, 2, 2, -1),
            NamedSequence::Jacobsthal => (0, 1, 1, -2),
            NamedSequence::JacobsthalLucas => (2, 1, 1, -2),
            NamedSequence::Balancing => (0, 1, 6, 1),
            NamedSequence::LucasBalancing => (1, 3, 6, 1),
        }
    }

    pub fn params<T: crate::exactmath::ExactDiv>(self) -> HoradamParams<T> {
        let (a, b, p, q) = self.table();
        HoradamParams::new(T::from_i64(a), T::from_i64(b), T::from_i64(p), T::from_i64(q))
            .expect("table parameters are non-zero")
    }

    pub fn sequence(self) -> HoradamSeq<Rational> {
        HoradamSeq::new(self.params())
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedSequence::Fibonacci => "fibonacci",
            NamedSequence::Lucas => "lucas",
            NamedSequence::Pell => "pell",
            NamedSequence::PellLucas => "pell_lucas",
            NamedSequence::Jacobsthal => "jacobsthal",
            NamedSequence::JacobsthalLucas => "jacobsthal_lucas",
            NamedSequence::Balancing => "balancing",
            NamedSequence::LucasBalancing => "lucas_balancing",
        }
    }

    /// Conventional single-letter symbol (`F`, `L`, `P`, `Q`, `J`, `j`, `B`, `C`).
    pub fn symbol(self) -> &'static str {
        match self {
            NamedSequence::Fibonacci => "F",
            NamedSequence::Lucas => "L",
            NamedSequence::Pell => "P",
            NamedSequence::PellLucas => "Q",
            NamedSequence::Jacobsthal => "J",
            NamedSequence::JacobsthalLucas => "j",
            NamedSequence::Balancing => "B",
            NamedSequence::LucasBalancing => "C",
        }
    }
}

impl fmt::Display for NamedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedSequence {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|n| n.name() == norm || n.symbol() == s.trim())
            .ok_or_else(|| SeqError::UnknownSequence(s.to_string()))
    }
}

/// Looks a sequence up by name or symbol.
pub fn make_named(name: &str) -> Result<HoradamSeq<Rational>, SeqError> {
    Ok(name.parse::<NamedSequence>()?.sequence())
}
