use num_traits::Zero;

use super::horadam::HoradamParams;
use super::SeqError;
use crate::exactmath::scalar::is_square_int;
use crate::exactmath::{ArithError, Field, QuadExt};
use crate::Rational;

/// Evaluates `w_n` from the characteristic roots
/// `alpha, beta = (p ± √Δ)/2`:
///
/// `w_n = ((b − a·beta)·alpha^n + (a·alpha − b)·beta^n) / (alpha − beta)`.
///
/// For non-square `Δ` the roots live in `Q(√Δ)` and the irrational part of the
/// result must cancel; square `Δ` gives rational roots directly.
pub fn binet_at(params: &HoradamParams<Rational>, n: i64) -> Result<Rational, SeqError> {
    let delta = params.discriminant();
    if delta.is_zero() {
        return Err(SeqError::DegenerateDiscriminant);
    }
    let half = Rational::new(1.into(), 2.into());
    let HoradamParams { a, b, p, .. } = params;
    if delta.is_square() {
        let root = Rational::new(delta.numer().sqrt(), delta.denom().sqrt());
        debug_assert!(is_square_int(delta.numer()));
        let alpha = (p + &root) * &half;
        let beta = (p - &root) * &half;
        let ca = b - a * &beta;
        let cb = a * &alpha - b;
        let value = ca * crate::exactmath::pow_i64(&alpha, n)? + cb * crate::exactmath::pow_i64(&beta, n)?;
        return Ok(value / (alpha - beta));
    }
    let alpha = QuadExt::new(delta.clone(), p * &half, half.clone())?;
    let beta = alpha.conjugate();
    let ca = alpha.lift(b.clone()).try_sub(&beta.scale(a))?;
    let cb = alpha.scale(a).try_sub(&alpha.lift(b.clone()))?;
    let num = ca.try_mul(&alpha.pow(n)?)?.try_add(&cb.try_mul(&beta.pow(n)?)?)?;
    let w = num.try_div(&alpha.try_sub(&beta)?)?;
    if !w.irrational_part().is_zero() {
        return Err(ArithError::InexactDivision.into());
    }
    Ok(w.rational_part().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Ring;
    use crate::sequences::{HoradamSeq, NamedSequence};

    #[test]
    fn examples() {
        let fib = NamedSequence::Fibonacci.params();
        assert_eq!(binet_at(&fib, 7).unwrap(), Rational::from_i64(13));
        assert_eq!(
            binet_at(&NamedSequence::Lucas.params(), 0).unwrap(),
            Rational::from_i64(2)
        );
        assert_eq!(
            binet_at(&NamedSequence::Pell.params(), 5).unwrap(),
            Rational::from_i64(29)
        );
    }

    #[test]
    fn square_discriminant_uses_rational_roots() {
        // p = 3, q = 2: roots 2 and 1
        let params = HoradamParams::new(
            Rational::from_i64(1),
            Rational::from_i64(4),
            Rational::from_i64(3),
            Rational::from_i64(2),
        )
        .unwrap();
        let seq = HoradamSeq::new(params.clone());
        for n in -6..12 {
            assert_eq!(binet_at(&params, n).unwrap(), seq.at(n));
        }
    }

    #[test]
    fn degenerate_rejected() {
        let params = HoradamParams::lucas_u(Rational::from_i64(2), Rational::from_i64(1)).unwrap();
        assert_eq!(binet_at(&params, 3), Err(SeqError::DegenerateDiscriminant));
    }
}
