use num_traits::Zero;

use crate::exactmath::Ring;
use crate::weights::{WeightContext, WeightError, WeightFamily};
use crate::ExactScalar;

/// `∑_{k=0}^{n} f(rk)·g(r(n−k))` by direct summation (empty for `n < 0`).
pub fn convolve<T: Ring>(f: impl Fn(i64) -> T, g: impl Fn(i64) -> T, r: i64, n: i64) -> T {
    (0..=n).fold(T::zero(), |acc, k| acc + f(r * k) * g(r * (n - k)))
}

/// `∑_{k=0}^{n} T(n,k)·f(rk)·g(r(n−k))` by direct summation.
pub fn weighted_convolve(
    w: WeightFamily,
    ctx: &WeightContext,
    f: impl Fn(i64) -> ExactScalar,
    g: impl Fn(i64) -> ExactScalar,
    r: i64,
    n: i64,
) -> Result<ExactScalar, WeightError> {
    if !w.in_domain(n) {
        return Err(WeightError::OutsideDomain { family: w.id(), n });
    }
    (0..=n).try_fold(ExactScalar::zero(), |acc, k| {
        let term = w.value(ctx, n, k)? * f(r * k) * g(r * (n - k));
        Ok(acc + term)
    })
}
