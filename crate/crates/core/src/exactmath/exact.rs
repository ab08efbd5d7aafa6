use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use super::poly::Polynomial;
use super::quad::QuadExt;
use super::scalar::{ExactDiv, Ring};
use super::ArithError;
use crate::Rational;

/// The common value domain of identity evaluation.
///
/// Binary operations need matching variants; a `Rational` operand is promoted
/// into the other operand's variant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    Rational(Rational),
    Quad(QuadExt<Rational>),
    Poly(Polynomial<Rational>),
}

/// Which variant a value (or an identity) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Rational,
    Quad,
    Polynomial,
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Quad => "quad",
            ScalarKind::Polynomial => "polynomial",
        })
    }
}

#[allow(clippy::large_enum_variant)]
enum Matched {
    Rational(Rational, Rational),
    Quad(QuadExt<Rational>, QuadExt<Rational>),
    Poly(Polynomial<Rational>, Polynomial<Rational>),
}

impl ExactScalar {
    pub fn int(v: i64) -> Self {
        ExactScalar::Rational(Rational::from_i64(v))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ExactScalar::Rational(Rational::new(n.into(), d.into()))
    }

    pub fn kind(&self) -> ScalarKind {
        match self {
            ExactScalar::Rational(_) => ScalarKind::Rational,
            ExactScalar::Quad(_) => ScalarKind::Quad,
            ExactScalar::Poly(_) => ScalarKind::Polynomial,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Polynomial<Rational>> {
        match self {
            ExactScalar::Poly(p) => Some(p),
            _ => None,
        }
    }

    /// Promotes a rational value to a constant polynomial; other values pass
    /// through unchanged.
    pub fn into_poly(self) -> Self {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Poly(Polynomial::constant(r)),
            other => other,
        }
    }

    /// Fails unless both operands can share a variant.
    pub fn check_compatible(&self, other: &Self) -> Result<(), ArithError> {
        Self::matched(self.clone(), other.clone()).map(|_| ())
    }

    fn matched(a: Self, b: Self) -> Result<Matched, ArithError> {
        use ExactScalar as E;
        Ok(match (a, b) {
            (E::Rational(x), E::Rational(y)) => Matched::Rational(x, y),
            (E::Quad(x), E::Quad(y)) => {
                if x.d() != y.d() {
                    return Err(ArithError::RadicandMismatch(x.d().to_string(), y.d().to_string()));
                }
                Matched::Quad(x, y)
            }
            (E::Poly(x), E::Poly(y)) => Matched::Poly(x, y),
            (E::Rational(x), E::Quad(y)) => Matched::Quad(y.lift(x), y),
            (E::Quad(x), E::Rational(y)) => {
                let y = x.lift(y);
                Matched::Quad(x, y)
            }
            (E::Rational(x), E::Poly(y)) => Matched::Poly(Polynomial::constant(x), y),
            (E::Poly(x), E::Rational(y)) => Matched::Poly(x, Polynomial::constant(y)),
            (x, y) => return Err(ArithError::VariantMismatch(x.kind(), y.kind())),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(match Self::matched(self.clone(), other.clone())? {
            Matched::Rational(x, y) => ExactScalar::Rational(x + y),
            Matched::Quad(x, y) => ExactScalar::Quad(x.try_add(&y)?),
            Matched::Poly(x, y) => ExactScalar::Poly(&x + &y),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(match Self::matched(self.clone(), other.clone())? {
            Matched::Rational(x, y) => ExactScalar::Rational(x - y),
            Matched::Quad(x, y) => ExactScalar::Quad(x.try_sub(&y)?),
            Matched::Poly(x, y) => ExactScalar::Poly(&x - &y),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        // Scalar-times-polynomial is common in identity evaluation; skip the
        // constant-polynomial promotion.
        match (self, other) {
            (ExactScalar::Rational(c), ExactScalar::Poly(p)) | (ExactScalar::Poly(p), ExactScalar::Rational(c)) => {
                return Ok(ExactScalar::Poly(p.scale(c)))
            }
            _ => {}
        }
        Ok(match Self::matched(self.clone(), other.clone())? {
            Matched::Rational(x, y) => ExactScalar::Rational(x * y),
            Matched::Quad(x, y) => ExactScalar::Quad(x.try_mul(&y)?),
            Matched::Poly(x, y) => ExactScalar::Poly(&x * &y),
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(match Self::matched(self.clone(), other.clone())? {
            Matched::Rational(x, y) => ExactScalar::Rational(x.exact_div(&y)?),
            Matched::Quad(x, y) => ExactScalar::Quad(x.try_div(&y)?),
            Matched::Poly(x, y) => ExactScalar::Poly(x.exact_div(&y)?),
        })
    }

    /// Renders the value for reports: integers and `p/q` strings, polynomials
    /// as their coefficient lists (lowest degree first).
    pub fn render(&self) -> RenderedValue {
        match self {
            ExactScalar::Rational(r) => RenderedValue::Scalar(r.to_string()),
            ExactScalar::Quad(q) => RenderedValue::Scalar(q.to_string()),
            ExactScalar::Poly(p) => RenderedValue::Coeffs(p.coeffs().iter().map(|c| c.to_string()).collect()),
        }
    }
}

/// Serialized form of an [`ExactScalar`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum RenderedValue {
    Scalar(String),
    Coeffs(Vec<String>),
}

impl fmt::Display for RenderedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RenderedValue::Scalar(s) => f.write_str(s),
            RenderedValue::Coeffs(c) => write!(f, "[{}]", c.join(", ")),
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render().fmt(f)
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl From<Polynomial<Rational>> for ExactScalar {
    fn from(p: Polynomial<Rational>) -> Self {
        ExactScalar::Poly(p)
    }
}

impl From<QuadExt<Rational>> for ExactScalar {
    fn from(q: QuadExt<Rational>) -> Self {
        ExactScalar::Quad(q)
    }
}

// Operator forms panic on variant mismatch; use the `try_*` methods where
// operands come from outside the crate.
macro_rules! checked_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;

            fn $m(self, rhs: Self) -> Self {
                self.$try(&rhs)
                    .unwrap_or_else(|e| panic!("exact scalar {}: {e}", stringify!($m)))
            }
        }

        impl $tr for &ExactScalar {
            type Output = ExactScalar;

            fn $m(self, rhs: Self) -> ExactScalar {
                self.$try(rhs)
                    .unwrap_or_else(|e| panic!("exact scalar {}: {e}", stringify!($m)))
            }
        }
    };
}

checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

impl Neg for ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> Self {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Quad(q) => ExactScalar::Quad(q.neg()),
            ExactScalar::Poly(p) => ExactScalar::Poly(-p),
        }
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        ExactScalar::int(0)
    }

    fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => r.is_zero(),
            ExactScalar::Quad(q) => q.is_zero(),
            ExactScalar::Poly(p) => p.is_zero(),
        }
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        ExactScalar::int(1)
    }
}

impl Ring for ExactScalar {
    fn from_i64(v: i64) -> Self {
        ExactScalar::int(v)
    }

    fn compatible(&self, other: &Self) -> Result<(), ArithError> {
        self.check_compatible(other)
    }
}

impl ExactDiv for ExactScalar {
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.try_div(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(d: i64, a: i64, b: i64) -> ExactScalar {
        ExactScalar::Quad(QuadExt::new(Rational::from_i64(d), Rational::from_i64(a), Rational::from_i64(b)).unwrap())
    }

    #[test]
    fn rational_promotes() {
        let p = ExactScalar::Poly(Polynomial::from_i64s(&[1, 1]));
        let sum = ExactScalar::int(2).try_add(&p).unwrap();
        assert_eq!(sum, ExactScalar::Poly(Polynomial::from_i64s(&[3, 1])));
        let prod = quad(5, 1, 1).try_mul(&ExactScalar::int(3)).unwrap();
        assert_eq!(prod, quad(5, 3, 3));
    }

    #[test]
    fn mismatches_are_errors() {
        let p = ExactScalar::Poly(Polynomial::x());
        assert!(matches!(
            p.try_mul(&quad(2, 0, 1)),
            Err(ArithError::VariantMismatch(..))
        ));
        assert!(matches!(
            quad(2, 0, 1).try_add(&quad(3, 0, 1)),
            Err(ArithError::RadicandMismatch(..))
        ));
    }

    #[test]
    fn rendering() {
        assert_eq!(ExactScalar::ratio(-2, 4).render(), RenderedValue::Scalar("-1/2".into()));
        assert_eq!(ExactScalar::int(7).to_string(), "7");
        let p = ExactScalar::Poly(Polynomial::new(vec![
            Rational::new(1.into(), 2.into()),
            Rational::from_i64(0),
            Rational::from_i64(-3),
        ]));
        assert_eq!(p.to_string(), "[1/2, 0, -3]");
    }
}
