//! Chebyshev polynomials `t_n(x)` and `u_n(x)` with exact coefficients, for
//! every integer `n`.
//!
//! Both kinds obey `p_{n+1} = 2x·p_n − p_{n−1}`; negative indices come from
//! running that recurrence backward, which yields `u_{−1} = 0`,
//! `t_{−n} = t_n` and `u_{−n} = −u_{n−2}`.
//!
//! The closed forms `t_n = (λ^n + γ^n)/2 = x(λ^n + γ^n)/(λ + γ)` with
//! `λ, γ = x ± √(x²−1)` agree because `λ + γ = 2x`; they are never evaluated
//! here. All identities are checked as coefficient-exact polynomials.

use std::fmt;
use std::str::FromStr;

use crate::exactmath::{ExactDiv, Field, Polynomial, Ring};
use crate::sequences::Recurrence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChebKind {
    /// `t_n`: `t_0 = 1`, `t_1 = x`.
    First,
    /// `u_n`: `u_0 = 1`, `u_1 = 2x`.
    Second,
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChebKind::First => "t",
            ChebKind::Second => "u",
        })
    }
}

impl FromStr for ChebKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "t" | "first" | "1" => Ok(ChebKind::First),
            "u" | "second" | "2" => Ok(ChebKind::Second),
            other => Err(format!("unknown Chebyshev kind `{other}` (expected t or u)")),
        }
    }
}

/// Memoized tables of both kinds; shareable between threads.
#[derive(Debug)]
pub struct Chebyshev<T> {
    first: Recurrence<Polynomial<T>>,
    second: Recurrence<Polynomial<T>>,
}

impl<T: Field> Default for Chebyshev<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Field> Chebyshev<T> {
    pub fn new() -> Self {
        let two_x = Polynomial::monomial(T::from_i64(2), 1);
        let one = Polynomial::constant(T::one());
        Self {
            first: Recurrence::new(one.clone(), Polynomial::x(), two_x.clone(), one.clone()),
            second: Recurrence::new(one.clone(), two_x.clone(), two_x, one),
        }
    }

    pub fn poly(&self, kind: ChebKind, n: i64) -> Polynomial<T> {
        match kind {
            ChebKind::First => self.first.at(n),
            ChebKind::Second => self.second.at(n),
        }
    }

    pub fn t(&self, n: i64) -> Polynomial<T> {
        self.first.at(n)
    }

    pub fn u(&self, n: i64) -> Polynomial<T> {
        self.second.at(n)
    }

    /// Whether `t_n = (u_n − u_{n−2})/2` holds exactly.
    pub fn tu_relation_holds(&self, n: i64) -> bool {
        let diff = &self.u(n) - &self.u(n - 2);
        diff.exact_div(&Polynomial::from_i64(2))
            .is_ok_and(|half| half == self.t(n))
    }
}

/// One-shot evaluation without a shared table.
pub fn cheb_poly<T: Field>(kind: ChebKind, n: i64) -> Polynomial<T> {
    Chebyshev::new().poly(kind, n)
}

pub fn cheb_tu_relation_check(n: i64) -> bool {
    Chebyshev::<crate::Rational>::new().tu_relation_holds(n)
}
