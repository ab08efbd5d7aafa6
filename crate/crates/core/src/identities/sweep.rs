use std::collections::HashSet;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::{check_identity, CheckResult, IdentityEntry, IdentityError, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// `1` evaluates cells in order on the calling thread.
    pub workers: usize,
    /// Stop after the first failing cell (in sweep order).
    pub fail_fast: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            fail_fast: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub identity: String,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// All checked cells in sweep order (entry, then `r`, then `n`), per-entry
/// tallies, and the first failure for every failing `(identity, r)`.
#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub results: Vec<CheckResult>,
    pub tallies: Vec<Tally>,
    pub counterexamples: Vec<CheckResult>,
    pub stopped_early: bool,
}

impl SweepReport {
    pub fn has_failures(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    pub fn tally(&self, id: &str) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.identity == id)
    }

    /// Smallest `n`, then smallest `|r|`, positive `r` first.
    pub fn minimal_counterexample(&self, id: &str) -> Option<&CheckResult> {
        self.counterexamples
            .iter()
            .filter(|c| c.identity == id)
            .min_by_key(|c| (c.n, c.r.unsigned_abs(), c.r < 0))
    }

    pub fn totals(&self) -> Tally {
        self.tallies.iter().fold(Tally::default(), |mut acc, t| {
            acc.pass += t.pass;
            acc.fail += t.fail;
            acc.skipped += t.skipped;
            acc
        })
    }

    fn assemble(entries: &[IdentityEntry], results: Vec<CheckResult>, stopped_early: bool) -> Self {
        let mut tallies: Vec<Tally> = entries
            .iter()
            .map(|e| Tally {
                identity: e.id.clone(),
                ..Tally::default()
            })
            .collect();
        let mut seen = HashSet::new();
        let mut counterexamples = Vec::new();
        for (res, t) in results.iter().zip(result_owner(entries, &results)) {
            let t = &mut tallies[t];
            match res.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skipped => t.skipped += 1,
            }
            if res.is_fail() && seen.insert((res.identity.clone(), res.r)) {
                counterexamples.push(res.clone());
            }
        }
        Self {
            results,
            tallies,
            counterexamples,
            stopped_early,
        }
    }
}

// Index of the entry each result belongs to. Results are in entry order, so
// a single forward scan suffices even when ids repeat.
fn result_owner<'a>(entries: &'a [IdentityEntry], results: &'a [CheckResult]) -> impl Iterator<Item = usize> + 'a {
    let mut idx = 0;
    results.iter().map(move |r| {
        while entries[idx].id != r.identity {
            idx += 1;
        }
        idx
    })
}

/// Sequential sweep over every `(entry, r, n)` cell.
pub fn sweep(entries: &[IdentityEntry], r_range: RangeInclusive<i64>, n_range: RangeInclusive<i64>) -> SweepReport {
    sweep_with(entries, r_range, n_range, SweepOptions::default()).expect("a sequential sweep needs no worker pool")
}

/// Sweep with an optional worker pool. The report does not depend on the
/// worker count.
pub fn sweep_with(
    entries: &[IdentityEntry],
    r_range: RangeInclusive<i64>,
    n_range: RangeInclusive<i64>,
    opts: SweepOptions,
) -> Result<SweepReport, IdentityError> {
    let cells: Vec<(usize, i64, i64)> = entries
        .iter()
        .enumerate()
        .flat_map(|(i, _)| {
            let n_range = n_range.clone();
            r_range
                .clone()
                .flat_map(move |r| n_range.clone().map(move |n| (i, r, n)))
        })
        .collect();
    let check = |&(i, r, n): &(usize, i64, i64)| check_identity(&entries[i], r, n);

    let mut results = Vec::with_capacity(cells.len());
    let mut stopped_early = false;
    if opts.workers <= 1 {
        for cell in &cells {
            let res = check(cell);
            let fail = res.is_fail();
            results.push(res);
            if fail && opts.fail_fast {
                stopped_early = true;
                break;
            }
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.workers).build()?;
        pool.install(|| {
            if !opts.fail_fast {
                results = cells.par_iter().map(check).collect();
                return;
            }
            for chunk in cells.chunks(64 * opts.workers) {
                let part: Vec<CheckResult> = chunk.par_iter().map(check).collect();
                if let Some(pos) = part.iter().position(CheckResult::is_fail) {
                    results.extend(part.into_iter().take(pos + 1));
                    stopped_early = true;
                    return;
                }
                results.extend(part);
            }
        });
    }
    Ok(SweepReport::assemble(entries, results, stopped_early))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::identities::{Provenance, ScalarDomain, Side};
    use crate::ExactScalar;

    fn entry(id: &str, bad_from: i64) -> IdentityEntry {
        let lhs: Side = Arc::new(|_, n| Ok(ExactScalar::int(n)));
        let rhs: Side = Arc::new(move |r, n| Ok(ExactScalar::int(if n >= bad_from && r != 0 { n + 1 } else { n })));
        IdentityEntry::new(id, "n = n", ScalarDomain::Rational, Provenance::AsPrinted, lhs, rhs)
    }

    #[test]
    fn tallies_and_minimal_counterexample() {
        let entries = vec![entry("good", 100), entry("bad", 3)];
        let rep = sweep(&entries, -2..=2, 0..=5);
        assert_eq!(rep.tally("good").unwrap().pass, 30);
        let bad = rep.tally("bad").unwrap();
        assert_eq!((bad.pass, bad.fail), (18, 12));
        assert_eq!(rep.counterexamples.len(), 4);
        let m = rep.minimal_counterexample("bad").unwrap();
        assert_eq!((m.r, m.n), (1, 3));
    }

    #[test]
    fn concurrent_matches_sequential() {
        let entries = vec![entry("a", 4), entry("b", 100), entry("c", 0)];
        for fail_fast in [false, true] {
            let seq = sweep_with(&entries, -3..=3, 0..=40, SweepOptions { workers: 1, fail_fast }).unwrap();
            let par = sweep_with(&entries, -3..=3, 0..=40, SweepOptions { workers: 4, fail_fast }).unwrap();
            assert_eq!(seq.results, par.results);
            assert_eq!(seq.tallies, par.tallies);
            assert_eq!(seq.stopped_early, fail_fast);
        }
    }

    #[test]
    fn fail_fast_keeps_the_failing_cell() {
        let entries = vec![entry("a", 2)];
        let rep = sweep_with(
            &entries,
            1..=1,
            0..=9,
            SweepOptions {
                workers: 1,
                fail_fast: true,
            },
        )
        .unwrap();
        assert_eq!(rep.results.len(), 3);
        assert!(rep.results.last().unwrap().is_fail());
    }
}
