//! Symmetric weight families `T(n, k) = T(n, n − k)` and their row sums.
//!
//! Weights are [`ExactScalar`] values so that polynomial-valued families
//! (Bernoulli and Chebyshev products) go through the same convolution code as
//! the integer ones.

mod tables;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub use tables::{bernoulli_poly, binomial, Bernoulli, Pascal};

use crate::exactmath::{ExactDiv, Ring};
use crate::sequences::LucasPair;
use crate::{ChebyshevTable, ExactScalar, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("k = {k} outside 0..={n}")]
    IndexOutOfRange { n: i64, k: i64 },
    #[error("weight `{family}` needs {what} in its context")]
    MissingContext { family: &'static str, what: &'static str },
    #[error("weight `{0}` has no closed row sum")]
    Unsupported(&'static str),
    #[error("n = {n} outside the domain of weight `{family}`")]
    OutsideDomain { family: &'static str, n: i64 },
    #[error("closed row sum of `{family}` undefined: {reason}")]
    ClosedFormUndefined { family: &'static str, reason: &'static str },
}

/// Everything a weight may need besides `(n, k)`.
#[derive(Clone, Debug, Default)]
pub struct WeightContext {
    pub r: Option<i64>,
    pub lucas: Option<Arc<LucasPair<Rational>>>,
    pub chebyshev: Option<Arc<ChebyshevTable>>,
}

impl WeightContext {
    pub fn with_r(mut self, r: i64) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_lucas(mut self, lucas: Arc<LucasPair<Rational>>) -> Self {
        self.lucas = Some(lucas);
        self
    }

    pub fn with_chebyshev(mut self, cheb: Arc<ChebyshevTable>) -> Self {
        self.chebyshev = Some(cheb);
        self
    }
}

/// The registered symmetric weight families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightFamily {
    /// `1`
    Constant,
    /// `k(n−k)`
    KComplement,
    /// `k²(n−k)²`
    KComplementSquared,
    /// `C(n, k)`
    Binomial,
    /// `C(n, k)²`
    BinomialSquared,
    /// `C(2n, 2k)`, defined for `n ≥ 1`
    EvenBinomial,
    /// `C(3n, 3k)`
    TripleBinomial,
    /// `C(n, k)·B_k(x)·B_{n−k}(x)`
    BernoulliProduct,
    /// `U_{rk}·U_{r(n−k)}`
    LucasUProduct,
    /// `V_{rk}·V_{r(n−k)}`
    LucasVProduct,
    /// `t_{rk}(x)·t_{r(n−k)}(x)`
    ChebyshevTProduct,
    /// `u_{rk}(x)·u_{r(n−k)}(x)`
    ChebyshevUProduct,
}

impl WeightFamily {
    pub const ALL: [WeightFamily; 12] = [
        WeightFamily::Constant,
        WeightFamily::KComplement,
        WeightFamily::KComplementSquared,
        WeightFamily::Binomial,
        WeightFamily::BinomialSquared,
        WeightFamily::EvenBinomial,
        WeightFamily::TripleBinomial,
        WeightFamily::BernoulliProduct,
        WeightFamily::LucasUProduct,
        WeightFamily::LucasVProduct,
        WeightFamily::ChebyshevTProduct,
        WeightFamily::ChebyshevUProduct,
    ];

    pub fn id(self) -> &'static str {
        match self {
            WeightFamily::Constant => "constant",
            WeightFamily::KComplement => "k_nk",
            WeightFamily::KComplementSquared => "k2_nk2",
            WeightFamily::Binomial => "binomial",
            WeightFamily::BinomialSquared => "binomial_sq",
            WeightFamily::EvenBinomial => "binomial_2n_2k",
            WeightFamily::TripleBinomial => "binomial_3n_3k",
            WeightFamily::BernoulliProduct => "bernoulli_product",
            WeightFamily::LucasUProduct => "lucas_uu",
            WeightFamily::LucasVProduct => "lucas_vv",
            WeightFamily::ChebyshevTProduct => "cheb_tt",
            WeightFamily::ChebyshevUProduct => "cheb_uu",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            WeightFamily::Constant => "1",
            WeightFamily::KComplement => "k(n-k)",
            WeightFamily::KComplementSquared => "k^2(n-k)^2",
            WeightFamily::Binomial => "C(n,k)",
            WeightFamily::BinomialSquared => "C(n,k)^2",
            WeightFamily::EvenBinomial => "C(2n,2k)",
            WeightFamily::TripleBinomial => "C(3n,3k)",
            WeightFamily::BernoulliProduct => "C(n,k) B_k(x) B_{n-k}(x)",
            WeightFamily::LucasUProduct => "U_{rk} U_{r(n-k)}",
            WeightFamily::LucasVProduct => "V_{rk} V_{r(n-k)}",
            WeightFamily::ChebyshevTProduct => "t_{rk}(x) t_{r(n-k)}(x)",
            WeightFamily::ChebyshevUProduct => "u_{rk}(x) u_{r(n-k)}(x)",
        }
    }

    /// Whether the family's values are polynomials in `x`.
    pub fn is_polynomial(self) -> bool {
        matches!(
            self,
            WeightFamily::BernoulliProduct | WeightFamily::ChebyshevTProduct | WeightFamily::ChebyshevUProduct
        )
    }

    pub fn in_domain(self, n: i64) -> bool {
        match self {
            WeightFamily::EvenBinomial => n >= 1,
            _ => n >= 0,
        }
    }

    fn check_domain(self, n: i64) -> Result<(), WeightError> {
        if self.in_domain(n) {
            Ok(())
        } else {
            Err(WeightError::OutsideDomain { family: self.id(), n })
        }
    }

    fn need_r(self, ctx: &WeightContext) -> Result<i64, WeightError> {
        ctx.r.ok_or(WeightError::MissingContext {
            family: self.id(),
            what: "a stride r",
        })
    }

    fn need_lucas(self, ctx: &WeightContext) -> Result<&LucasPair<Rational>, WeightError> {
        ctx.lucas.as_deref().ok_or(WeightError::MissingContext {
            family: self.id(),
            what: "a Lucas pair",
        })
    }

    fn need_cheb(self, ctx: &WeightContext) -> Result<&ChebyshevTable, WeightError> {
        ctx.chebyshev.as_deref().ok_or(WeightError::MissingContext {
            family: self.id(),
            what: "a Chebyshev table",
        })
    }

    /// `T(n, k)`.
    pub fn value(self, ctx: &WeightContext, n: i64, k: i64) -> Result<ExactScalar, WeightError> {
        if k < 0 || k > n {
            return Err(WeightError::IndexOutOfRange { n, k });
        }
        self.check_domain(n)?;
        let (nu, ku) = (n as u64, k as u64);
        let int = |v: BigInt| ExactScalar::Rational(Rational::from_integer(v));
        Ok(match self {
            WeightFamily::Constant => ExactScalar::int(1),
            WeightFamily::KComplement => int(BigInt::from(k * (n - k))),
            WeightFamily::KComplementSquared => {
                let v = BigInt::from(k * (n - k));
                int(&v * &v)
            }
            WeightFamily::Binomial => int(binomial(nu, ku)),
            WeightFamily::BinomialSquared => {
                let c = binomial(nu, ku);
                int(&c * &c)
            }
            WeightFamily::EvenBinomial => int(binomial(2 * nu, 2 * ku)),
            WeightFamily::TripleBinomial => int(binomial(3 * nu, 3 * ku)),
            WeightFamily::BernoulliProduct => {
                let c = Rational::from_integer(binomial(nu, ku));
                let p = &bernoulli_poly(ku) * &bernoulli_poly(nu - ku);
                ExactScalar::Poly(p.scale(&c))
            }
            WeightFamily::LucasUProduct => {
                let (r, l) = (self.need_r(ctx)?, self.need_lucas(ctx)?);
                ExactScalar::Rational(l.u.at(r * k) * l.u.at(r * (n - k)))
            }
            WeightFamily::LucasVProduct => {
                let (r, l) = (self.need_r(ctx)?, self.need_lucas(ctx)?);
                ExactScalar::Rational(l.v.at(r * k) * l.v.at(r * (n - k)))
            }
            WeightFamily::ChebyshevTProduct => {
                let (r, c) = (self.need_r(ctx)?, self.need_cheb(ctx)?);
                ExactScalar::Poly(&c.t(r * k) * &c.t(r * (n - k)))
            }
            WeightFamily::ChebyshevUProduct => {
                let (r, c) = (self.need_r(ctx)?, self.need_cheb(ctx)?);
                ExactScalar::Poly(&c.u(r * k) * &c.u(r * (n - k)))
            }
        })
    }

    /// `∑_{k=0}^{n} T(n, k)` by direct summation.
    pub fn row_sum(self, ctx: &WeightContext, n: i64) -> Result<ExactScalar, WeightError> {
        self.check_domain(n)?;
        (0..=n).try_fold(ExactScalar::zero(), |acc, k| Ok(acc + self.value(ctx, n, k)?))
    }

    /// Closed form of the row sum.
    pub fn closed_sum(self, ctx: &WeightContext, n: i64) -> Result<ExactScalar, WeightError> {
        self.check_domain(n)?;
        let ratio = |num: BigInt, den: i64| ExactScalar::Rational(Rational::new(num, BigInt::from(den)));
        let two = BigInt::from(2);
        Ok(match self {
            WeightFamily::Constant => ExactScalar::int(n + 1),
            WeightFamily::KComplement => ratio(BigInt::from((n - 1) * n * (n + 1)), 6),
            WeightFamily::KComplementSquared => {
                let n4 = BigInt::from(n).pow(4);
                ratio(BigInt::from(n) * (n4 - 1), 30)
            }
            WeightFamily::Binomial => ratio(two.pow(n as u32), 1),
            WeightFamily::BinomialSquared => ratio(binomial(2 * n as u64, n as u64), 1),
            WeightFamily::EvenBinomial => ratio(two.pow(2 * n as u32 - 1), 1),
            WeightFamily::TripleBinomial => {
                // (2/3)(2^{3n−1} + (−1)^n) = (2^{3n} + 2(−1)^n)/3
                let sign = if n % 2 == 0 { 2 } else { -2 };
                ratio(two.pow(3 * n as u32) + sign, 3)
            }
            WeightFamily::BernoulliProduct => ExactScalar::Poly(bernoulli_convolution_closed(n)),
            WeightFamily::LucasUProduct | WeightFamily::LucasVProduct => {
                let (r, l) = (self.need_r(ctx)?, self.need_lucas(ctx)?);
                let ur = l.u.at(r);
                let undefined = |reason| WeightError::ClosedFormUndefined {
                    family: self.id(),
                    reason,
                };
                if ur.is_zero() {
                    return Err(undefined("U_r = 0"));
                }
                let head = Rational::from_i64(n + 1) * &ur * l.v.at(r * n);
                let tail = Rational::from_i64(2) * l.u.at(r * (n + 1));
                let value = if self == WeightFamily::LucasUProduct {
                    let delta = l.discriminant();
                    if delta.is_zero() {
                        return Err(undefined("p^2 - 4q = 0"));
                    }
                    (head - tail) / (delta * ur)
                } else {
                    (head + tail) / ur
                };
                ExactScalar::Rational(value)
            }
            WeightFamily::ChebyshevTProduct | WeightFamily::ChebyshevUProduct => {
                let (r, c) = (self.need_r(ctx)?, self.need_cheb(ctx)?);
                let u_prev = c.u(r - 1);
                if u_prev.is_zero() {
                    return Err(WeightError::ClosedFormUndefined {
                        family: self.id(),
                        reason: "u_{r-1}(x) = 0",
                    });
                }
                let k = Rational::from_i64(n + 1);
                let tail = c.u(r * n + r - 1);
                let (num, den) = if self == WeightFamily::ChebyshevTProduct {
                    let num = &(&u_prev * &c.t(r * n)).scale(&k) + &tail;
                    (num, u_prev.scale(&Rational::from_i64(2)))
                } else {
                    let num = &(&u_prev * &c.t(r * n + 2)).scale(&k) - &tail;
                    let x2m1 = Poly::from_i64s(&[-2, 0, 2]);
                    (num, &x2m1 * &u_prev)
                };
                ExactScalar::Poly(num.exact_div(&den).map_err(|_| WeightError::ClosedFormUndefined {
                    family: self.id(),
                    reason: "closed form is not a polynomial",
                })?)
            }
        })
    }
}

/// `n(2x−1)B_{n−1}(2x) − (n−1)B_n(2x)`, the closed form of
/// `∑ C(n,k) B_k(x) B_{n−k}(x)`.
pub fn bernoulli_convolution_closed(n: i64) -> Poly {
    let n_u = n as u64;
    let tail = tables::bernoulli_at_double(n_u).scale(&Rational::from_i64(n - 1));
    if n == 0 {
        return -tail;
    }
    let lin = Poly::from_i64s(&[-1, 2]).scale(&Rational::from_i64(n));
    &(&lin * &tables::bernoulli_at_double(n_u - 1)) - &tail
}

/// Left side of the same identity, by direct summation.
pub fn bernoulli_convolution_direct(n: i64) -> Poly {
    let n_u = n as u64;
    (0..=n_u).fold(Poly::zero(), |acc, k| {
        let c = Rational::from_integer(binomial(n_u, k));
        &acc + &(&bernoulli_poly(k) * &bernoulli_poly(n_u - k)).scale(&c)
    })
}

impl fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for WeightFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL.into_iter().find(|w| w.id() == s.trim()).ok_or_else(|| {
            let known: Vec<_> = Self::ALL.iter().map(|w| w.id()).collect();
            format!("unknown weight family `{s}` (known: {})", known.join(", "))
        })
    }
}
