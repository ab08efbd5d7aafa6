use std::fmt;

use super::scalar::{Field, Ring};
use super::ArithError;

/// An element `a + b·√d` of the quadratic extension of `T` by a non-square `d`.
///
/// Every operation between two values requires the same radicand; there is
/// no implicit embedding of `Q(√d)` into `Q(√d')`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt<T> {
    d: T,
    a: T,
    b: T,
}

impl<T: Field> QuadExt<T> {
    pub fn new(d: T, a: T, b: T) -> Result<Self, ArithError> {
        if d.is_square() {
            return Err(ArithError::SquareRadicand(format!("{d:?}")));
        }
        Ok(Self { d, a, b })
    }

    /// Embeds a base-field element.
    pub fn from_base(d: T, a: T) -> Result<Self, ArithError> {
        Self::new(d, a, T::zero())
    }

    /// The element `√d` itself.
    pub fn sqrt_d(d: T) -> Result<Self, ArithError> {
        Self::new(d, T::zero(), T::one())
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn rational_part(&self) -> &T {
        &self.a
    }

    pub fn irrational_part(&self) -> &T {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn same_field(&self, other: &Self) -> Result<(), ArithError> {
        if self.d != other.d {
            return Err(ArithError::RadicandMismatch(
                format!("{:?}", self.d),
                format!("{:?}", other.d),
            ));
        }
        Ok(())
    }

    fn with(&self, a: T, b: T) -> Self {
        Self {
            d: self.d.clone(),
            a,
            b,
        }
    }

    /// Lifts a base-field element into this value's field.
    pub fn lift(&self, a: T) -> Self {
        self.with(a, T::zero())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_field(other)?;
        Ok(self.with(self.a.clone() + other.a.clone(), self.b.clone() + other.b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_field(other)?;
        Ok(self.with(self.a.clone() - other.a.clone(), self.b.clone() - other.b.clone()))
    }

    /// `(a + b√d)(a' + b'√d) = (aa' + bb'd) + (ab' + ba')√d`
    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_field(other)?;
        let a = self.a.clone() * other.a.clone() + self.b.clone() * other.b.clone() * self.d.clone();
        let b = self.a.clone() * other.b.clone() + self.b.clone() * other.a.clone();
        Ok(self.with(a, b))
    }

    pub fn neg(&self) -> Self {
        self.with(-self.a.clone(), -self.b.clone())
    }

    pub fn conjugate(&self) -> Self {
        self.with(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - self.d.clone() * self.b.clone() * self.b.clone()
    }

    pub fn scale(&self, c: &T) -> Self {
        self.with(self.a.clone() * c.clone(), self.b.clone() * c.clone())
    }

    /// `(a − b√d)/(a² − d·b²)`. The norm vanishes only at zero because `d` is
    /// not a square.
    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let c = self.conjugate();
        Ok(self.with(c.a.exact_div(&n)?, c.b.exact_div(&n)?))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_field(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self, ArithError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.lift(T::one());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for QuadExt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}
