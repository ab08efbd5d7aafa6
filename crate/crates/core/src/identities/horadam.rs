use std::sync::Arc;

use crate::exactmath::{pow_i64, ExactDiv};
use crate::sequences::HoradamSeq;

use super::convolve::convolve;

/// Normalizer of the general two-sequence convolution:
///
/// `γ(r) = q_X^{2r} + q_Y^{2r} − (q_X^r + q_Y^r)·V_{X,r}·V_{Y,r}
///        + q_X^r·V_{Y,2r} + q_Y^r·V_{X,r}²`
///
/// It vanishes when the two recurrences share a characteristic root power.
pub fn gamma_general<T: ExactDiv>(q_x: &T, q_y: &T, v_x: impl Fn(i64) -> T, v_y: impl Fn(i64) -> T, r: i64) -> T {
    let qxr = pow_i64(q_x, r).expect("q_X is non-zero");
    let qyr = pow_i64(q_y, r).expect("q_Y is non-zero");
    let (vxr, vyr) = (v_x(r), v_y(r));
    qxr.clone() * qxr.clone() + qyr.clone() * qyr.clone() - (qxr.clone() + qyr.clone()) * vxr.clone() * vyr
        + qxr * v_y(2 * r)
        + qyr * vxr.clone() * vxr
}

/// Two Horadam sequences `X`, `Y` together with their second-kind Lucas
/// companions `V_X`, `V_Y`.
#[derive(Debug, Clone)]
pub struct HoradamPair<T> {
    pub x: Arc<HoradamSeq<T>>,
    pub y: Arc<HoradamSeq<T>>,
    pub v_x: Arc<HoradamSeq<T>>,
    pub v_y: Arc<HoradamSeq<T>>,
}

impl<T: ExactDiv> HoradamPair<T> {
    pub fn new(x: Arc<HoradamSeq<T>>, y: Arc<HoradamSeq<T>>) -> Self {
        let v_x = Arc::new(HoradamSeq::new(x.params().companion_v()));
        let v_y = Arc::new(HoradamSeq::new(y.params().companion_v()));
        Self { x, y, v_x, v_y }
    }

    /// Reuses existing companion sequences (e.g. shared catalog handles).
    pub fn with_companions(
        x: Arc<HoradamSeq<T>>,
        y: Arc<HoradamSeq<T>>,
        v_x: Arc<HoradamSeq<T>>,
        v_y: Arc<HoradamSeq<T>>,
    ) -> Self {
        debug_assert_eq!(v_x.params(), &x.params().companion_v());
        debug_assert_eq!(v_y.params(), &y.params().companion_v());
        Self { x, y, v_x, v_y }
    }

    pub fn gamma(&self, r: i64) -> T {
        gamma_general(
            &self.x.params().q,
            &self.y.params().q,
            |i| self.v_x.at(i),
            |i| self.v_y.at(i),
            r,
        )
    }

    /// `∑_{k=0}^{n} X_{rk}·Y_{r(n−k)}`.
    pub fn convolution(&self, r: i64, n: i64) -> T {
        convolve(|i| self.x.at(i), |i| self.y.at(i), r, n)
    }

    /// The four-term closed form that equals `γ(r)` times the convolution.
    pub fn rhs(&self, r: i64, n: i64) -> T {
        let (x, y, vx, vy) = (&self.x, &self.y, &self.v_x, &self.v_y);
        let qxr = pow_i64(&x.params().q, r).expect("q_X is non-zero");
        let qyr = pow_i64(&y.params().q, r).expect("q_Y is non-zero");
        let cx = qxr.clone() - vx.at(r) * vy.at(r) + vy.at(2 * r);
        let cy = qyr.clone() - vy.at(r) * vx.at(r) + vx.at(2 * r);
        let term = |own: &HoradamSeq<T>, other: &HoradamSeq<T>, v_own_r: T, c: &T, q_r: T| {
            q_r * own.at(r * n) * (c.clone() * other.at(0) + v_own_r.clone() * other.at(r) - other.at(2 * r))
                - own.at(r * (n + 1)) * (c.clone() * other.at(r) + v_own_r * other.at(2 * r) - other.at(3 * r))
        };
        term(x, y, vx.at(r), &cx, qxr) + term(y, x, vy.at(r), &cy, qyr)
    }
}

/// Four-term closed form for `γ(r)·∑ X_{rk} Y_{r(n−k)}`.
pub fn horadam_conv_rhs<T: ExactDiv>(pair: &HoradamPair<T>, r: i64, n: i64) -> T {
    pair.rhs(r, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Ring;
    use crate::sequences::{make_named, NamedSequence};
    use crate::Rational;

    fn pair(a: NamedSequence, b: NamedSequence) -> HoradamPair<Rational> {
        HoradamPair::new(Arc::new(a.sequence()), Arc::new(b.sequence()))
    }

    #[test]
    fn gamma_examples() {
        use NamedSequence::*;
        let l = make_named("lucas").unwrap();
        let jl = make_named("jacobsthal_lucas").unwrap();
        let g = gamma_general(
            &Rational::from_i64(-1),
            &Rational::from_i64(-2),
            |i| l.at(i),
            |i| jl.at(i),
            1,
        );
        assert_eq!(g, Rational::from_i64(1));
        assert_eq!(pair(Fibonacci, Pell).gamma(1), Rational::from_i64(-1));
        assert_eq!(pair(Fibonacci, Fibonacci).gamma(1), Rational::from_i64(0));
    }

    #[test]
    fn rhs_examples() {
        use NamedSequence::*;
        let lj = pair(Lucas, Jacobsthal);
        assert_eq!(lj.rhs(1, 1), Rational::from_i64(2));
        let fp = pair(Fibonacci, Pell);
        assert_eq!(fp.rhs(1, 2), Rational::from_i64(-1));
        assert_eq!(fp.convolution(1, 2), Rational::from_i64(1));
        for r in [-2, 1, 3] {
            let want = fp.gamma(r) * fp.x.at(0) * fp.y.at(0);
            assert_eq!(fp.rhs(r, 0), want);
        }
    }

    #[test]
    fn gamma_vanishes_for_shared_roots() {
        use NamedSequence::*;
        let p = pair(Fibonacci, Lucas);
        for r in -3..6 {
            assert_eq!(p.gamma(r), Rational::from_i64(0));
        }
    }
}
