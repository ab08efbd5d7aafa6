//! Scalar traits shared by every recurrence, polynomial and identity
//! evaluator in the crate.
//!
//! The exact path uses [`BigRational`]; `f32`/`f64` implement the same traits
//! so the generic machinery can also be driven numerically.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// A commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Image of an integer under the canonical embedding Z -> R.
    fn from_i64(v: i64) -> Self;

    /// Whether two values can meet in one binary operation.
    fn compatible(&self, _other: &Self) -> Result<(), ArithError> {
        Ok(())
    }

    /// Product of two dense coefficient lists (lowest degree first).
    ///
    /// Polynomial multiplication routes through here so that coefficient
    /// types with a faster kernel can override the schoolbook loop.
    fn mul_slices(a: &[Self], b: &[Self]) -> Vec<Self> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Self::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        out
    }
}

/// A ring in which exact quotients can be attempted.
pub trait ExactDiv: Ring {
    /// Returns `self / rhs` when the quotient exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError>;
}

/// A field whose elements can be tested for being perfect squares.
pub trait Field: ExactDiv {
    fn is_square(&self) -> bool;

    fn inv(&self) -> Result<Self, ArithError> {
        Self::one().exact_div(self)
    }
}

/// `base^exp` for any integer exponent; negative exponents invert first.
pub fn pow_i64<T: ExactDiv>(base: &T, exp: i64) -> Result<T, ArithError> {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp >= 0 {
        Ok(p)
    } else {
        T::one().exact_div(&p)
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    // Clear denominators, convolve over the integers, divide once.
    fn mul_slices(a: &[Self], b: &[Self]) -> Vec<Self> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let (ia, da) = integer_image(a);
        let (ib, db) = integer_image(b);
        let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in ia.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in ib.iter().enumerate() {
                if !y.is_zero() {
                    acc[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        acc.into_iter().map(|c| BigRational::new(c, den.clone())).collect()
    }
}

fn integer_image(v: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    (ints, lcm)
}

impl ExactDiv for BigRational {
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

impl Field for BigRational {
    fn is_square(&self) -> bool {
        !self.is_negative() && is_square_int(self.numer()) && is_square_int(self.denom())
    }
}

/// Integer-square-root test.
pub fn is_square_int(v: &BigInt) -> bool {
    if v.is_negative() {
        return false;
    }
    let s = v.sqrt();
    &s * &s == *v
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Ring for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }

        impl ExactDiv for $t {
            fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
                if *rhs == 0.0 {
                    return Err(ArithError::DivisionByZero);
                }
                Ok(self / rhs)
            }
        }

        // Over the reals every non-negative number is a square.
        impl Field for $t {
            fn is_square(&self) -> bool {
                *self >= 0.0
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);
