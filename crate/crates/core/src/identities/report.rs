use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::exactmath::RenderedValue;

use super::{CheckResult, IdentityError, Status};

/// Serialized form of a [`CheckResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub identity: String,
    pub r: i64,
    pub n: i64,
    pub status: Status,
    pub lhs: Option<RenderedValue>,
    pub rhs: Option<RenderedValue>,
    pub reason: Option<String>,
}

impl From<&CheckResult> for CheckRecord {
    fn from(c: &CheckResult) -> Self {
        Self {
            identity: c.identity.clone(),
            r: c.r,
            n: c.n,
            status: c.status,
            lhs: c.lhs.as_ref().map(|v| v.render()),
            rhs: c.rhs.as_ref().map(|v| v.render()),
            reason: c.reason.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Table,
    Json,
    Csv,
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Table => "table",
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        })
    }
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(ReportFormat::Table),
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!("unknown format `{other}` (expected table, json or csv)")),
        }
    }
}

fn cell(v: &Option<RenderedValue>) -> String {
    v.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

/// Writes one record per result: JSON lines, CSV with a header row, or an
/// aligned text table.
pub fn write_records<W: Write + ?Sized>(
    format: ReportFormat,
    results: &[CheckResult],
    out: &mut W,
) -> Result<(), IdentityError> {
    let records = results.iter().map(CheckRecord::from);
    match format {
        ReportFormat::Json => {
            for rec in records {
                serde_json::to_writer(&mut *out, &rec)?;
                out.write_all(b"\n")?;
            }
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["identity", "r", "n", "status", "lhs", "rhs", "reason"])?;
            for rec in records {
                w.write_record([
                    rec.identity,
                    rec.r.to_string(),
                    rec.n.to_string(),
                    rec.status.to_string(),
                    cell(&rec.lhs),
                    cell(&rec.rhs),
                    rec.reason.unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        ReportFormat::Table => {
            let width = results.iter().map(|c| c.identity.len()).max().unwrap_or(8).max(8);
            writeln!(
                out,
                "{:<width$}  {:>4}  {:>4}  {:<7}  detail",
                "identity", "r", "n", "status"
            )?;
            for rec in records {
                let detail = match (&rec.lhs, &rec.rhs) {
                    (Some(l), Some(r)) => format!("lhs = {l}; rhs = {r}"),
                    _ => rec.reason.clone().unwrap_or_default(),
                };
                writeln!(
                    out,
                    "{:<width$}  {:>4}  {:>4}  {:<7}  {}",
                    rec.identity,
                    rec.r,
                    rec.n,
                    rec.status.to_string(),
                    detail
                )?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactScalar, Poly};

    fn results() -> Vec<CheckResult> {
        vec![
            CheckResult {
                identity: "a".into(),
                r: -1,
                n: 2,
                status: Status::Fail,
                lhs: Some(ExactScalar::ratio(3, 4)),
                rhs: Some(ExactScalar::Poly(Poly::from_i64s(&[0, 1]))),
                reason: None,
            },
            CheckResult {
                identity: "a".into(),
                r: 0,
                n: 2,
                status: Status::Skipped,
                lhs: None,
                rhs: None,
                reason: Some("γ(r) = 0".into()),
            },
        ]
    }

    fn render(f: ReportFormat) -> String {
        let mut buf = Vec::new();
        write_records(f, &results(), &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn json_lines() {
        let s = render(ReportFormat::Json);
        let lines: Vec<_> = s.lines().collect();
        assert_eq!(
            lines[0],
            r#"{"identity":"a","r":-1,"n":2,"status":"fail","lhs":"3/4","rhs":["0","1"],"reason":null}"#
        );
        let v: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(v["status"], "skipped");
        assert_eq!(v["reason"], "γ(r) = 0");
    }

    #[test]
    fn csv_rows() {
        let s = render(ReportFormat::Csv);
        let mut lines = s.lines();
        assert_eq!(lines.next(), Some("identity,r,n,status,lhs,rhs,reason"));
        assert_eq!(lines.next(), Some(r#"a,-1,2,fail,3/4,"[0, 1]","#));
    }

    #[test]
    fn table_has_every_cell() {
        let s = render(ReportFormat::Table);
        assert_eq!(s.lines().count(), 3);
        assert!(s.contains("lhs = 3/4; rhs = [0, 1]"));
        assert!(s.contains("γ(r) = 0"));
    }
}
