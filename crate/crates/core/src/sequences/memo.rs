use std::sync::RwLock;

use crate::exactmath::ExactDiv;

/// Memoized second-order recurrence `w_n = p·w_{n−1} − q·w_{n−2}` over all
/// integer indices.
///
/// Negative indices run the recurrence backward,
/// `w_{n} = (p·w_{n+1} − w_{n+2})/q`. The cache grows outward from the seeds
/// toward each requested index and is never evicted. It sits behind a lock,
/// so one instance can be shared between threads.
#[derive(Debug)]
pub struct Recurrence<T> {
    p: T,
    q: T,
    cache: RwLock<Memo<T>>,
}

#[derive(Debug)]
struct Memo<T> {
    // forward[i] = w_i
    forward: Vec<T>,
    // backward[i] = w_{-(i+1)}
    backward: Vec<T>,
}

impl<T: ExactDiv> Recurrence<T> {
    /// `q` must be invertible in `T` for negative indices to be reachable.
    pub fn new(w0: T, w1: T, p: T, q: T) -> Self {
        Self {
            p,
            q,
            cache: RwLock::new(Memo {
                forward: vec![w0, w1],
                backward: Vec::new(),
            }),
        }
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn at(&self, n: i64) -> T {
        if let Some(v) = self.lookup(n) {
            return v;
        }
        let mut memo = self.cache.write().expect("recurrence cache poisoned");
        if n >= 0 {
            let n = n as usize;
            while memo.forward.len() <= n {
                let len = memo.forward.len();
                let next = self.forward_step(&memo.forward[len - 2], &memo.forward[len - 1]);
                memo.forward.push(next);
            }
            memo.forward[n].clone()
        } else {
            let idx = (-(n + 1)) as usize;
            while memo.backward.len() <= idx {
                let next = {
                    let (w1, w2) = memo.successors(memo.backward.len());
                    self.backward_step(w1, w2)
                };
                memo.backward.push(next);
            }
            memo.backward[idx].clone()
        }
    }

    /// Evaluates without touching the cache.
    pub fn at_uncached(&self, n: i64) -> T {
        let memo = self.cache.read().expect("recurrence cache poisoned");
        let (mut lo, mut hi) = (memo.forward[0].clone(), memo.forward[1].clone());
        drop(memo);
        if n >= 0 {
            if n == 0 {
                return lo;
            }
            for _ in 1..n {
                let next = self.forward_step(&lo, &hi);
                lo = std::mem::replace(&mut hi, next);
            }
            hi
        } else {
            // (lo, hi) = (w_k, w_{k+1}), walking k down to n
            for _ in 0..(-n) {
                let prev = self.backward_step(&lo, &hi);
                hi = std::mem::replace(&mut lo, prev);
            }
            lo
        }
    }

    fn lookup(&self, n: i64) -> Option<T> {
        let memo = self.cache.read().expect("recurrence cache poisoned");
        if n >= 0 {
            memo.forward.get(n as usize).cloned()
        } else {
            memo.backward.get((-(n + 1)) as usize).cloned()
        }
    }

    fn forward_step(&self, w2: &T, w1: &T) -> T {
        self.p.clone() * w1.clone() - self.q.clone() * w2.clone()
    }

    fn backward_step(&self, w1: &T, w2: &T) -> T {
        (self.p.clone() * w1.clone() - w2.clone())
            .exact_div(&self.q)
            .expect("recurrence parameter q must be invertible")
    }
}

impl<T> Memo<T> {
    // The two values following w_{-(i+1)}: (w_{-i}, w_{-i+1}).
    fn successors(&self, i: usize) -> (&T, &T) {
        match i {
            0 => (&self.forward[0], &self.forward[1]),
            1 => (&self.backward[0], &self.forward[0]),
            _ => (&self.backward[i - 1], &self.backward[i - 2]),
        }
    }
}
