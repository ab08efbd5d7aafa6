use std::sync::Arc;

use super::memo::Recurrence;
use super::SeqError;
use crate::exactmath::ExactDiv;

/// The quadruple `(a, b; p, q)`: seeds `w_0 = a`, `w_1 = b` and the
/// recurrence `w_n = p·w_{n−1} − q·w_{n−2}` with `p, q ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HoradamParams<T> {
    pub a: T,
    pub b: T,
    pub p: T,
    pub q: T,
}

impl<T: ExactDiv> HoradamParams<T> {
    pub fn new(a: T, b: T, p: T, q: T) -> Result<Self, SeqError> {
        if p.is_zero() {
            return Err(SeqError::ZeroParameter("p"));
        }
        if q.is_zero() {
            return Err(SeqError::ZeroParameter("q"));
        }
        Ok(Self { a, b, p, q })
    }

    /// First-kind Lucas sequence `U(p, q) = w(0, 1; p, q)`.
    pub fn lucas_u(p: T, q: T) -> Result<Self, SeqError> {
        Self::new(T::zero(), T::one(), p, q)
    }

    /// Second-kind Lucas sequence `V(p, q) = w(2, p; p, q)`.
    pub fn lucas_v(p: T, q: T) -> Result<Self, SeqError> {
        Self::new(T::from_i64(2), p.clone(), p, q)
    }

    /// `Δ = p² − 4q`.
    pub fn discriminant(&self) -> T {
        self.p.clone() * self.p.clone() - T::from_i64(4) * self.q.clone()
    }

    /// Parameters of the second-kind Lucas sequence sharing this recurrence.
    pub fn companion_v(&self) -> Self {
        Self {
            a: T::from_i64(2),
            b: self.p.clone(),
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }
}

/// A Horadam sequence with a memoizing evaluator.
#[derive(Debug)]
pub struct HoradamSeq<T> {
    params: HoradamParams<T>,
    rec: Recurrence<T>,
}

impl<T: ExactDiv> HoradamSeq<T> {
    pub fn new(params: HoradamParams<T>) -> Self {
        let rec = Recurrence::new(params.a.clone(), params.b.clone(), params.p.clone(), params.q.clone());
        Self { params, rec }
    }

    pub fn params(&self) -> &HoradamParams<T> {
        &self.params
    }

    /// `w_n` for any integer `n`.
    pub fn at(&self, n: i64) -> T {
        self.rec.at(n)
    }

    pub fn at_uncached(&self, n: i64) -> T {
        self.rec.at_uncached(n)
    }
}

impl<T: ExactDiv> From<HoradamParams<T>> for HoradamSeq<T> {
    fn from(params: HoradamParams<T>) -> Self {
        Self::new(params)
    }
}

pub fn lucas_u_at<T: ExactDiv>(p: T, q: T, n: i64) -> Result<T, SeqError> {
    Ok(HoradamSeq::new(HoradamParams::lucas_u(p, q)?).at(n))
}

pub fn lucas_v_at<T: ExactDiv>(p: T, q: T, n: i64) -> Result<T, SeqError> {
    Ok(HoradamSeq::new(HoradamParams::lucas_v(p, q)?).at(n))
}

/// The two Lucas sequences `U(p, q)` and `V(p, q)` of one recurrence.
#[derive(Debug)]
pub struct LucasPair<T> {
    pub u: Arc<HoradamSeq<T>>,
    pub v: Arc<HoradamSeq<T>>,
}

impl<T: ExactDiv> LucasPair<T> {
    pub fn new(p: T, q: T) -> Result<Self, SeqError> {
        Ok(Self {
            u: Arc::new(HoradamParams::lucas_u(p.clone(), q.clone())?.into()),
            v: Arc::new(HoradamParams::lucas_v(p, q)?.into()),
        })
    }

    pub fn p(&self) -> &T {
        &self.u.params().p
    }

    pub fn q(&self) -> &T {
        &self.u.params().q
    }

    pub fn discriminant(&self) -> T {
        self.u.params().discriminant()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn lucas_values() {
        assert_eq!(lucas_u_at(q(1), q(-1), 7).unwrap(), q(13));
        assert_eq!(lucas_v_at(q(1), q(-1), 0).unwrap(), q(2));
        assert_eq!(lucas_v_at(q(2), q(-1), 3).unwrap(), q(14));
        assert_eq!(lucas_u_at(q(0), q(-1), 3), Err(SeqError::ZeroParameter("p")));
        assert_eq!(lucas_v_at(q(1), q(0), 3), Err(SeqError::ZeroParameter("q")));
    }

    #[test]
    fn seeds() {
        let s = HoradamSeq::new(HoradamParams::new(q(3), q(-7), q(2), q(5)).unwrap());
        assert_eq!(s.at(0), q(3));
        assert_eq!(s.at(1), q(-7));
    }

    #[test]
    fn float_scalar_runs_the_same_engine() {
        let fib = HoradamSeq::new(HoradamParams::lucas_u(1.0f64, -1.0).unwrap());
        assert_eq!(fib.at(10), 55.0);
        assert_eq!(fib.at(-4), -3.0);
    }
}
