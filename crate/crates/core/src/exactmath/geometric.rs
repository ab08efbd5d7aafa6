use super::scalar::ExactDiv;
use super::ArithError;

/// `∑_{k=0}^{n} x^k z^{n−k}`, computed as `(x^{n+1} − z^{n+1})/(x − z)`, or
/// as the limit `(n+1)·x^n` when `x = z`.
pub fn geom_ratio_sum<T: ExactDiv>(x: &T, z: &T, n: u32) -> Result<T, ArithError> {
    x.compatible(z)?;
    let diff = x.clone() - z.clone();
    if diff.is_zero() {
        return Ok(T::from_i64(i64::from(n) + 1) * num_traits::pow(x.clone(), n as usize));
    }
    let top = num_traits::pow(x.clone(), n as usize + 1) - num_traits::pow(z.clone(), n as usize + 1);
    top.exact_div(&diff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Ring;
    use crate::exactmath::{ExactScalar, QuadExt};
    use crate::Rational;

    fn brute<T: Ring>(x: &T, z: &T, n: u32) -> T {
        (0..=n).fold(T::zero(), |acc, k| {
            acc + num_traits::pow(x.clone(), k as usize) * num_traits::pow(z.clone(), (n - k) as usize)
        })
    }

    #[test]
    fn examples() {
        let three = Rational::from_i64(3);
        assert_eq!(geom_ratio_sum(&three, &three, 2).unwrap(), Rational::from_i64(27));
        let s = geom_ratio_sum(&Rational::from_i64(2), &Rational::from_i64(1), 3).unwrap();
        assert_eq!(s, Rational::from_i64(15));
    }

    #[test]
    fn golden_ratio_pair_gives_fibonacci() {
        let half = Rational::new(1.into(), 2.into());
        let five = Rational::from_i64(5);
        let alpha = QuadExt::new(five.clone(), half.clone(), half.clone()).unwrap();
        let beta = alpha.conjugate();
        let got = geom_ratio_sum(&ExactScalar::Quad(alpha), &ExactScalar::Quad(beta), 4).unwrap();
        let want = QuadExt::from_base(five, Rational::from_i64(5)).unwrap();
        assert_eq!(got, ExactScalar::Quad(want));
    }

    #[test]
    fn agrees_with_direct_sum() {
        for n in 0..8 {
            let x = Rational::new(3.into(), 7.into());
            let z = Rational::new((-5).into(), 2.into());
            assert_eq!(geom_ratio_sum(&x, &z, n).unwrap(), brute(&x, &z, n));
            assert_eq!(geom_ratio_sum(&x, &x, n).unwrap(), brute(&x, &x, n));
        }
    }

    #[test]
    fn variant_mismatch() {
        let p = ExactScalar::Poly(crate::Poly::x());
        let q = ExactScalar::Quad(QuadExt::sqrt_d(Rational::from_i64(2)).unwrap());
        assert!(matches!(
            geom_ratio_sum(&p, &q, 3),
            Err(ArithError::VariantMismatch(..))
        ));
    }
}
