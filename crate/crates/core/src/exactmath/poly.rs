use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{ExactDiv, Field, Ring};
use super::ArithError;

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient list never ends in a zero; the zero polynomial is the
/// empty list. Equality is therefore coefficient-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x0.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `p(c·x)`: coefficient `i` picks up a factor `c^i`.
    pub fn compose_scale(&self, c: &T) -> Self {
        let mut f = T::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * f.clone());
            f = f * c.clone();
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        num_traits::pow(self.clone(), e as usize)
    }
}

impl<T: Field> Polynomial<T> {
    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        let dd = divisor.degree().ok_or(ArithError::DivisionByZero)?;
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].exact_div(lead)?;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * b.clone();
            }
            quot[i] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl<T: Ring> Zero for Polynomial<T> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Polynomial<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        Polynomial::new(T::mul_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl<T: Ring> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Ring> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Ring> Ring for Polynomial<T> {
    fn from_i64(v: i64) -> Self {
        Self::constant(T::from_i64(v))
    }
}

impl<T: Field> ExactDiv for Polynomial<T> {
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        let (q, r) = self.div_rem(rhs)?;
        if !r.is_zero() {
            return Err(ArithError::InexactDivision);
        }
        Ok(q)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Polynomial<Rational>;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn products() {
        let a = P::from_i64s(&[0, 2]);
        let b = P::from_i64s(&[-1, 0, 2]);
        assert_eq!(&a * &b, P::from_i64s(&[0, -2, 0, 4]));
        assert_eq!(&b * &P::one(), b);
        let xm1 = P::from_i64s(&[-1, 1]);
        let xp1 = P::from_i64s(&[1, 1]);
        assert_eq!(xm1 * xp1, P::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(P::from_i64s(&[-1, 0, 2]).eval(&r(1, 1)), r(1, 1));
        assert_eq!(P::from_i64s(&[0, -3, 0, 4]).eval(&r(2, 1)), r(26, 1));
        assert_eq!(P::zero().eval(&r(7, 3)), r(0, 1));
    }

    #[test]
    fn normalization_trims_zeros() {
        let p = P::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(P::from_i64s(&[0, 0]).degree(), None);
        let diff = &P::from_i64s(&[1, 1]) - &P::from_i64s(&[0, 1]);
        assert_eq!(diff, P::one());
    }

    #[test]
    fn division() {
        let num = P::from_i64s(&[-1, 0, 1]);
        let den = P::from_i64s(&[-1, 1]);
        assert_eq!(num.exact_div(&den).unwrap(), P::from_i64s(&[1, 1]));
        assert_eq!(
            P::from_i64s(&[1, 0, 1]).exact_div(&den),
            Err(ArithError::InexactDivision)
        );
        assert_eq!(num.exact_div(&P::zero()), Err(ArithError::DivisionByZero));
        let (q, rem) = P::from_i64s(&[3, 0, 2]).div_rem(&P::from_i64s(&[0, 4])).unwrap();
        assert_eq!(q, P::new(vec![r(0, 1), r(1, 2)]));
        assert_eq!(rem, P::from_i64s(&[3]));
    }

    #[test]
    fn scaled_argument() {
        let p = P::from_i64s(&[1, 1, 1]);
        assert_eq!(p.compose_scale(&r(2, 1)), P::from_i64s(&[1, 2, 4]));
    }
}
