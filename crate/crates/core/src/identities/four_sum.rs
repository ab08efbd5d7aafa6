use crate::exactmath::{geom_ratio_sum, ExactDiv};
use crate::ExactScalar;

use super::{CheckResult, IdentityError, Status};

/// Coefficients and ratios of two two-term geometric sequences
/// `A1·x^k + B1·y^k` and `A2·z^k + B2·w^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourSumParams<T> {
    pub a1: T,
    pub a2: T,
    pub b1: T,
    pub b2: T,
    pub x: T,
    pub y: T,
    pub z: T,
    pub w: T,
}

impl<T: ExactDiv> FourSumParams<T> {
    fn named(&self) -> [(&'static str, &T); 8] {
        [
            ("A1", &self.a1),
            ("A2", &self.a2),
            ("B1", &self.b1),
            ("B2", &self.b2),
            ("x", &self.x),
            ("y", &self.y),
            ("z", &self.z),
            ("w", &self.w),
        ]
    }

    fn validate(&self) -> Result<(), IdentityError> {
        let all = self.named();
        for (i, (name, v)) in all.iter().enumerate() {
            if v.is_zero() {
                return Err(IdentityError::ZeroParameter(name));
            }
            for (_, other) in &all[i + 1..] {
                v.compatible(other)?;
            }
        }
        Ok(())
    }
}

/// Both sides of the four-geometric-sum identity
///
/// `∑_{k=0}^{n} (A1x^k + B1y^k)(A2z^{n−k} + B2w^{n−k})
///   = A1A2·G(x,z) + A1B2·G(x,w) + B1A2·G(y,z) + B1B2·G(y,w)`
///
/// where `G(a,b) = ∑ a^k b^{n−k}` in closed form.
pub fn four_sum_sides<T: ExactDiv>(p: &FourSumParams<T>, n: u32) -> Result<(T, T), IdentityError> {
    p.validate()?;
    let pw = |b: &T, e: u32| num_traits::pow(b.clone(), e as usize);
    let mut lhs = T::zero();
    for k in 0..=n {
        let left = p.a1.clone() * pw(&p.x, k) + p.b1.clone() * pw(&p.y, k);
        let right = p.a2.clone() * pw(&p.z, n - k) + p.b2.clone() * pw(&p.w, n - k);
        lhs = lhs + left * right;
    }
    let g = |a: &T, b: &T| geom_ratio_sum(a, b, n);
    let rhs = p.a1.clone() * p.a2.clone() * g(&p.x, &p.z)?
        + p.a1.clone() * p.b2.clone() * g(&p.x, &p.w)?
        + p.b1.clone() * p.a2.clone() * g(&p.y, &p.z)?
        + p.b1.clone() * p.b2.clone() * g(&p.y, &p.w)?;
    Ok((lhs, rhs))
}

/// Checks the four-geometric-sum identity at `n`. The result is reported
/// under the id `four_geometric_sum` with `r = 1`.
pub fn four_sum_check(p: &FourSumParams<ExactScalar>, n: u32) -> Result<CheckResult, IdentityError> {
    let (lhs, rhs) = four_sum_sides(p, n)?;
    Ok(CheckResult {
        identity: "four_geometric_sum".into(),
        r: 1,
        n: n as i64,
        status: if lhs == rhs { Status::Pass } else { Status::Fail },
        lhs: Some(lhs),
        rhs: Some(rhs),
        reason: None,
    })
}
