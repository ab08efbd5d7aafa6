use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::exactmath::ArithError;
use crate::weights::WeightError;
use crate::{ExactScalar, ScalarKind};

/// One side of an identity as a function of `(r, n)`.
pub type Side = Arc<dyn Fn(i64, i64) -> Result<ExactScalar, EvalError> + Send + Sync>;

/// Domain predicate: `Some(reason)` skips the cell.
pub type Guard = Arc<dyn Fn(i64, i64) -> Option<String> + Send + Sync>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarDomain {
    Rational,
    Polynomial,
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarDomain::Rational => "rational",
            ScalarDomain::Polynomial => "polynomial",
        })
    }
}

/// Where an entry's closed form comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Obtained by instantiating a general theorem; expected to hold.
    TheoremDerived,
    /// Transcribed as printed; the oracle decides.
    AsPrinted,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::TheoremDerived => "theorem-derived",
            Provenance::AsPrinted => "as-printed",
        })
    }
}

#[derive(Clone)]
pub struct IdentityEntry {
    pub id: String,
    /// The identity as a plain formula.
    pub statement: String,
    pub note: Option<String>,
    pub domain: ScalarDomain,
    pub provenance: Provenance,
    pub tags: Vec<String>,
    /// Entries written for one specific stride are only checked at it.
    pub fixed_r: Option<i64>,
    lhs: Side,
    rhs: Side,
    guard: Option<Guard>,
}

impl fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("domain", &self.domain)
            .field("provenance", &self.provenance)
            .field("tags", &self.tags)
            .field("fixed_r", &self.fixed_r)
            .finish_non_exhaustive()
    }
}

impl IdentityEntry {
    pub fn new(
        id: impl Into<String>,
        statement: impl Into<String>,
        domain: ScalarDomain,
        provenance: Provenance,
        lhs: Side,
        rhs: Side,
    ) -> Self {
        Self {
            id: id.into(),
            statement: statement.into(),
            note: None,
            domain,
            provenance,
            tags: Vec::new(),
            fixed_r: None,
            lhs,
            rhs,
            guard: None,
        }
    }

    pub fn with_guard(mut self, guard: Guard) -> Self {
        self.guard = Some(guard);
        self
    }

    pub fn with_tags(mut self, tags: &[&str]) -> Self {
        self.tags.extend(tags.iter().map(|t| t.to_string()));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn at_stride(mut self, r: i64) -> Self {
        self.fixed_r = Some(r);
        self
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    /// Why `(r, n)` is outside this entry's domain, if it is.
    pub fn skip_reason(&self, r: i64, n: i64) -> Option<String> {
        if n < 0 {
            return Some("outside domain: n < 0".into());
        }
        if let Some(k) = self.fixed_r {
            if r != k {
                return Some(format!("outside domain: stated for r = {k} only"));
            }
        }
        self.guard.as_ref().and_then(|g| g(r, n))
    }

    pub fn eval_lhs(&self, r: i64, n: i64) -> Result<ExactScalar, EvalError> {
        (self.lhs)(r, n)
    }

    pub fn eval_rhs(&self, r: i64, n: i64) -> Result<ExactScalar, EvalError> {
        (self.rhs)(r, n)
    }

    /// A copy whose right-hand side is off by one; exercises the fail path.
    pub fn perturbed(&self) -> Self {
        let rhs = self.rhs.clone();
        let one = ExactScalar::int(1);
        let mut e = self.clone();
        e.id = format!("{}_perturbed", self.id);
        e.provenance = Provenance::AsPrinted;
        e.rhs = Arc::new(move |r, n| Ok(rhs(r, n)?.try_add(&one)?));
        e
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome of one `(identity, r, n)` cell.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub identity: String,
    pub r: i64,
    pub n: i64,
    pub status: Status,
    pub lhs: Option<ExactScalar>,
    pub rhs: Option<ExactScalar>,
    pub reason: Option<String>,
}

impl CheckResult {
    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

fn into_domain(v: ExactScalar, domain: ScalarDomain) -> Result<ExactScalar, ScalarKind> {
    match (domain, v.kind()) {
        (ScalarDomain::Rational, ScalarKind::Rational) => Ok(v),
        (ScalarDomain::Polynomial, ScalarKind::Rational | ScalarKind::Polynomial) => Ok(v.into_poly()),
        (_, kind) => Err(kind),
    }
}

/// Checks one cell. Never fails: domain skips, evaluation errors and value
/// mismatches are all encoded in the result.
pub fn check_identity(entry: &IdentityEntry, r: i64, n: i64) -> CheckResult {
    let mut out = CheckResult {
        identity: entry.id.clone(),
        r,
        n,
        status: Status::Skipped,
        lhs: None,
        rhs: None,
        reason: None,
    };
    if let Some(reason) = entry.skip_reason(r, n) {
        out.reason = Some(reason);
        return out;
    }
    out.status = Status::Fail;
    let (lhs, rhs) = match (entry.eval_lhs(r, n), entry.eval_rhs(r, n)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => {
            out.reason = Some(format!("evaluation error: {e}"));
            return out;
        }
    };
    match (into_domain(lhs, entry.domain), into_domain(rhs, entry.domain)) {
        (Ok(l), Ok(r)) => {
            out.status = if l == r { Status::Pass } else { Status::Fail };
            out.lhs = Some(l);
            out.rhs = Some(r);
        }
        (l, r) => {
            let kind = l.err().or(r.err()).expect("one side is out of domain");
            out.reason = Some(format!(
                "scalar domain violation: {kind} value in a {} entry",
                entry.domain
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    fn constant(v: ExactScalar) -> Side {
        Arc::new(move |_, _| Ok(v.clone()))
    }

    fn entry(l: ExactScalar, r: ExactScalar, domain: ScalarDomain) -> IdentityEntry {
        IdentityEntry::new(
            "t",
            "l = r",
            domain,
            Provenance::TheoremDerived,
            constant(l),
            constant(r),
        )
    }

    #[test]
    fn pass_fail_and_perturbation() {
        let e = entry(ExactScalar::int(3), ExactScalar::int(3), ScalarDomain::Rational);
        assert_eq!(check_identity(&e, 1, 0).status, Status::Pass);
        let bad = check_identity(&e.perturbed(), 1, 0);
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.rhs, Some(ExactScalar::int(4)));
        assert_eq!(bad.identity, "t_perturbed");
    }

    #[test]
    fn skips() {
        let e = entry(ExactScalar::int(1), ExactScalar::int(1), ScalarDomain::Rational)
            .at_stride(2)
            .with_guard(Arc::new(|_, n| (n == 3).then(|| "n = 3".to_string())));
        assert_eq!(check_identity(&e, 1, 0).status, Status::Skipped);
        assert_eq!(check_identity(&e, 2, -1).status, Status::Skipped);
        let g = check_identity(&e, 2, 3);
        assert_eq!((g.status, g.reason.as_deref()), (Status::Skipped, Some("n = 3")));
        assert_eq!(check_identity(&e, 2, 4).status, Status::Pass);
    }

    #[test]
    fn domain_promotion_and_violation() {
        let p = ExactScalar::Poly(Poly::from_i64s(&[5]));
        let e = entry(ExactScalar::int(5), p.clone(), ScalarDomain::Polynomial);
        assert_eq!(check_identity(&e, 1, 1).status, Status::Pass);
        let e = entry(ExactScalar::int(5), p, ScalarDomain::Rational);
        let res = check_identity(&e, 1, 1);
        assert_eq!(res.status, Status::Fail);
        assert!(res.reason.unwrap().starts_with("scalar domain violation"));
    }

    #[test]
    fn evaluation_errors_fail() {
        let lhs: Side = Arc::new(|_, _| Err(ArithError::DivisionByZero.into()));
        let e = IdentityEntry::new(
            "z",
            "1/0 = 0",
            ScalarDomain::Rational,
            Provenance::AsPrinted,
            lhs,
            constant(ExactScalar::int(0)),
        );
        let res = check_identity(&e, 1, 1);
        assert_eq!(res.status, Status::Fail);
        assert!(res.reason.unwrap().starts_with("evaluation error"));
    }
}
