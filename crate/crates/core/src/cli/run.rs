use std::io::Write;
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::Parser;
use serde::Serialize;

use crate::exactmath::Ring;
use crate::identities::{
    convolve, sweep_with, weighted_convolve, write_records, Catalog, IdentityEntry, IdentityError, ReportFormat,
    SweepOptions, SweepReport,
};
use crate::sequences::{binet_at, HoradamParams, LucasPair};
use crate::weights::WeightContext;
use crate::{ChebyshevTable, ExactScalar, Horadam, Params, Rational};

use super::config::show_range;
use super::{Cli, CliConfig, CliError, Selector, SequenceSpec, VerifyConfig};

/// Parses `args` (program name first), runs the command, and returns the
/// exit code. `env_workers` stands in for `$SEQCONV_WORKERS`.
pub fn main_with<I, T>(args: I, env_workers: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match cli.resolve(env_workers) {
        Ok(config) => run(&config, &Catalog::builtin(), out, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Executes a resolved command against `catalog`.
pub fn run(config: &CliConfig, catalog: &Catalog, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let res = match config {
        CliConfig::List { tag, format } => list(catalog, tag.as_deref(), *format, out).map(|_| 0),
        CliConfig::Verify(v) => verify(v, catalog, out, err),
        CliConfig::Eval { sequence, index, binet } => eval(sequence, *index, *binet, out).map(|_| 0),
        CliConfig::Conv { x, y, r, n, weight } => conv(x, y, *r, *n, *weight, out).map(|_| 0),
        CliConfig::Cheb { kind, degree, at } => {
            let p = ChebyshevTable::new().poly(*kind, *degree);
            let v = match at {
                Some(x) => ExactScalar::Rational(p.eval(x)),
                None => ExactScalar::Poly(p),
            };
            writeln!(out, "{v}").map(|_| 0).map_err(CliError::from)
        }
    };
    res.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        2
    })
}

fn select(catalog: &Catalog, selector: &Selector) -> Result<Vec<IdentityEntry>, CliError> {
    match selector {
        Selector::All => Ok(catalog.theorem_derived()),
        Selector::Tag(t) => {
            let v = catalog.with_tag(t);
            if v.is_empty() {
                return Err(CliError::Usage(format!(
                    "no entries tagged `{t}` (known tags: {})",
                    catalog.tags().join(", ")
                )));
            }
            Ok(v)
        }
        Selector::Ids(ids) => Ok(catalog.select_ids(ids)?),
    }
}

#[derive(Serialize)]
struct Header<'a> {
    identities: usize,
    r: String,
    n: String,
    generated_unix: u64,
    selector: &'a str,
}

fn verify(v: &VerifyConfig, catalog: &Catalog, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let entries = select(catalog, &v.selector)?;
    let selector = match &v.selector {
        Selector::All => "all".to_string(),
        Selector::Tag(t) => format!("tag {t}"),
        Selector::Ids(ids) => format!("id {}", ids.join(",")),
    };
    if v.header {
        let header = Header {
            identities: entries.len(),
            r: show_range(&v.r),
            n: show_range(&v.n),
            generated_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            selector: &selector,
        };
        match v.format {
            ReportFormat::Json => {
                serde_json::to_writer(&mut *out, &serde_json::json!({ "header": header }))
                    .map_err(IdentityError::from)?;
                writeln!(out)?;
            }
            ReportFormat::Table => writeln!(
                out,
                "# seqconv verify ({}): {} identities, r in {}, n in {}, generated at unix time {}",
                header.selector, header.identities, header.r, header.n, header.generated_unix
            )?,
            ReportFormat::Csv => writeln!(
                err,
                "# seqconv verify ({}): {} identities, r in {}, n in {}, generated at unix time {}",
                header.selector, header.identities, header.r, header.n, header.generated_unix
            )?,
        }
    }
    let opts = SweepOptions {
        workers: v.workers,
        fail_fast: v.fail_fast,
    };
    let report = sweep_with(&entries, v.r.clone(), v.n.clone(), opts)?;
    write_records(v.format, &report.results, out)?;
    if v.format == ReportFormat::Table {
        writeln!(out)?;
        write_summary(&report, out)?;
    } else {
        write_summary(&report, err)?;
    }
    Ok(if report.has_failures() { 1 } else { 0 })
}

/// Totals plus the minimal counterexample of every failing identity.
pub fn write_summary(report: &SweepReport, out: &mut dyn Write) -> std::io::Result<()> {
    let t = report.totals();
    writeln!(
        out,
        "summary: {} identities, {} cells: {} pass, {} fail, {} skipped",
        report.tallies.len(),
        t.pass + t.fail + t.skipped,
        t.pass,
        t.fail,
        t.skipped
    )?;
    for tally in report.tallies.iter().filter(|t| t.fail > 0) {
        let c = report
            .minimal_counterexample(&tally.identity)
            .expect("failing identity has a counterexample");
        let show = |v: &Option<ExactScalar>| v.as_ref().map_or("-".to_string(), |v| v.to_string());
        write!(
            out,
            "counterexample {}: r = {}, n = {}, lhs = {}, rhs = {}",
            c.identity,
            c.r,
            c.n,
            show(&c.lhs),
            show(&c.rhs)
        )?;
        match &c.reason {
            Some(reason) => writeln!(out, " ({reason})")?,
            None => writeln!(out)?,
        }
    }
    if report.stopped_early {
        writeln!(out, "stopped at the first failing cell")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ListRecord<'a> {
    id: &'a str,
    provenance: String,
    domain: String,
    tags: &'a [String],
    statement: &'a str,
    note: Option<&'a str>,
}

fn list(catalog: &Catalog, tag: Option<&str>, format: ReportFormat, out: &mut dyn Write) -> Result<(), CliError> {
    let entries: Vec<&IdentityEntry> = catalog
        .entries()
        .iter()
        .filter(|e| tag.is_none_or(|t| e.has_tag(t)))
        .collect();
    let records = entries.iter().map(|e| ListRecord {
        id: &e.id,
        provenance: e.provenance.to_string(),
        domain: e.domain.to_string(),
        tags: &e.tags,
        statement: &e.statement,
        note: e.note.as_deref(),
    });
    match format {
        ReportFormat::Json => {
            for rec in records {
                serde_json::to_writer(&mut *out, &rec).map_err(IdentityError::from)?;
                writeln!(out)?;
            }
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let csv_err = |e: csv::Error| CliError::from(IdentityError::from(e));
            w.write_record(["id", "provenance", "domain", "tags", "statement", "note"])
                .map_err(csv_err)?;
            for rec in records {
                w.write_record([
                    rec.id,
                    &rec.provenance,
                    &rec.domain,
                    &rec.tags.join(" "),
                    rec.statement,
                    rec.note.unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
        ReportFormat::Table => {
            let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
            for rec in records {
                writeln!(
                    out,
                    "{:<width$}  {:<15}  {:<10}  [{}]",
                    rec.id,
                    rec.provenance,
                    rec.domain,
                    rec.tags.join(", ")
                )?;
                writeln!(out, "{:<width$}  {}", "", rec.statement)?;
                if let Some(note) = rec.note {
                    writeln!(out, "{:<width$}  note: {note}", "")?;
                }
            }
        }
    }
    Ok(())
}

fn params(spec: &SequenceSpec) -> Result<Params, CliError> {
    Ok(match spec {
        SequenceSpec::Named(n) => n.params(),
        SequenceSpec::Custom(v) => {
            let [a, b, p, q] = v.as_ref().clone();
            HoradamParams::new(a, b, p, q)?
        }
    })
}

fn eval(spec: &SequenceSpec, index: i64, binet: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let params = params(spec)?;
    let v = if binet {
        binet_at(&params, index)?
    } else {
        Horadam::new(params).at(index)
    };
    writeln!(out, "{v}")?;
    Ok(())
}

fn conv(
    x: &SequenceSpec,
    y: &SequenceSpec,
    r: i64,
    n: i64,
    weight: Option<crate::weights::WeightFamily>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (xs, ys) = (Horadam::new(params(x)?), Horadam::new(params(y)?));
    let v = match weight {
        None => ExactScalar::Rational(convolve(|i| xs.at(i), |i| ys.at(i), r, n)),
        Some(w) => {
            let fib = LucasPair::new(Rational::from_i64(1), Rational::from_i64(-1))?;
            let ctx = WeightContext::default()
                .with_r(r)
                .with_lucas(Arc::new(fib))
                .with_chebyshev(Arc::new(ChebyshevTable::new()));
            weighted_convolve(
                w,
                &ctx,
                |i| ExactScalar::Rational(xs.at(i)),
                |i| ExactScalar::Rational(ys.at(i)),
                r,
                n,
            )?
        }
    };
    writeln!(out, "{v}")?;
    Ok(())
}
