use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::exactmath::Ring;
use crate::{Poly, Rational};

/// Pascal's triangle, grown row by row on demand.
#[derive(Debug, Default)]
pub struct Pascal {
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl Pascal {
    /// `C(n, k)`; zero outside `0 ≤ k ≤ n`.
    pub fn get(&self, n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::default();
        }
        let (n, k) = (n as usize, k as usize);
        {
            let rows = self.rows.read().expect("pascal table poisoned");
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        let mut rows = self.rows.write().expect("pascal table poisoned");
        if rows.is_empty() {
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() <= n {
            let prev = rows.last().expect("seeded");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        rows[n][k].clone()
    }
}

/// Bernoulli polynomials from
/// `B_m(x) = x^m − (1/(m+1))·∑_{k<m} C(m+1, k)·B_k(x)`.
#[derive(Debug, Default)]
pub struct Bernoulli {
    polys: RwLock<Vec<Poly>>,
}

impl Bernoulli {
    pub fn get(&self, m: u64) -> Poly {
        let m = m as usize;
        {
            let polys = self.polys.read().expect("bernoulli table poisoned");
            if let Some(p) = polys.get(m) {
                return p.clone();
            }
        }
        let mut polys = self.polys.write().expect("bernoulli table poisoned");
        while polys.len() <= m {
            let j = polys.len();
            let mut acc = Poly::monomial(Rational::one(), j);
            let scale = Rational::new(BigInt::one(), BigInt::from(j + 1));
            for (k, bk) in polys.iter().enumerate() {
                let c = Rational::from_integer(binomial(j as u64 + 1, k as u64)) * &scale;
                acc = &acc - &bk.scale(&c);
            }
            polys.push(acc);
        }
        polys[m].clone()
    }
}

fn pascal() -> &'static Pascal {
    static TABLE: OnceLock<Pascal> = OnceLock::new();
    TABLE.get_or_init(Pascal::default)
}

fn bernoulli_table() -> &'static Bernoulli {
    static TABLE: OnceLock<Bernoulli> = OnceLock::new();
    TABLE.get_or_init(Bernoulli::default)
}

/// `C(n, k)` from the shared Pascal table.
pub fn binomial(n: u64, k: u64) -> BigInt {
    pascal().get(n, k)
}

/// `B_m(x)` from the shared table.
pub fn bernoulli_poly(m: u64) -> Poly {
    bernoulli_table().get(m)
}

/// `B_m(2x)`.
pub(crate) fn bernoulli_at_double(m: u64) -> Poly {
    bernoulli_poly(m).compose_scale(&Rational::from_i64(2))
}
