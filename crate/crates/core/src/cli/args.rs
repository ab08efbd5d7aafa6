use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::chebyshev::ChebKind;
use crate::identities::ReportFormat;
use crate::sequences::NamedSequence;
use crate::weights::WeightFamily;
use crate::Rational;

use super::config::{parse_range, FileConfig};
use super::{CliConfig, CliError, Selector, SequenceSpec, VerifyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "seqconv",
    version,
    about = "Exact checks of convolution identities for recurrence sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog entries with their formulas and provenance.
    List {
        #[arg(long)]
        tag: Option<String>,
        #[arg(long, default_value = "table")]
        format: ReportFormat,
    },
    /// Check identities over a grid of (r, n) cells.
    Verify(VerifyArgs),
    /// Print one sequence value.
    Eval {
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long, allow_hyphen_values = true)]
        index: i64,
        /// Evaluate through the closed form instead of the recurrence.
        #[arg(long)]
        binet: bool,
    },
    /// Print ∑ T(n,k)·X_{rk}·Y_{r(n−k)} by direct summation.
    Conv {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long)]
        n: i64,
        /// Weight family id; unweighted when absent.
        #[arg(long)]
        weight: Option<WeightFamily>,
    },
    /// Print a Chebyshev polynomial as coefficients, lowest degree first.
    Cheb {
        #[arg(long)]
        kind: ChebKind,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        /// Evaluate at this rational point instead.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<Rational>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SeqArg {
    /// Name or symbol of a built-in sequence.
    #[arg(long)]
    pub sequence: Option<String>,
    /// Custom Horadam parameters `a,b,p,q` (rationals allowed).
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
}

#[derive(Debug, Default, Args)]
pub struct VerifyArgs {
    /// All theorem-derived entries.
    #[arg(long, conflicts_with_all = ["tag", "id"])]
    pub all: bool,
    #[arg(long, conflicts_with = "id")]
    pub tag: Option<String>,
    /// Entry id; repeatable.
    #[arg(long)]
    pub id: Vec<String>,
    /// Stride range `a..b` (default 1..4).
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Index range `a..b` (default 0..20).
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    #[arg(long)]
    pub format: Option<ReportFormat>,
    #[arg(long)]
    pub fail_fast: bool,
    /// Worker threads; 1 runs sequentially. Defaults to $SEQCONV_WORKERS.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Omit the timestamped header line.
    #[arg(long)]
    pub no_header: bool,
    /// TOML file selecting the sweep.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn parse_spec(arg: &SeqArg) -> Result<SequenceSpec, CliError> {
    if let Some(name) = &arg.sequence {
        return Ok(SequenceSpec::Named(name.parse()?));
    }
    let raw = arg.params.as_deref().unwrap_or_default();
    let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
    let vals: Result<Vec<Rational>, _> = parts.iter().map(|p| p.parse::<Rational>()).collect();
    match vals {
        Ok(v) if v.len() == 4 => Ok(SequenceSpec::Custom(Box::new([
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            v[3].clone(),
        ]))),
        _ => Err(CliError::Usage(format!("--params expects a,b,p,q; got `{raw}`"))),
    }
}

fn named(s: &str) -> Result<SequenceSpec, CliError> {
    Ok(SequenceSpec::Named(s.parse::<NamedSequence>()?))
}

impl VerifyArgs {
    /// Merges flags, the optional config file, and the environment.
    pub fn resolve(&self, env_workers: Option<&str>) -> Result<VerifyConfig, CliError> {
        let file = match &self.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let selector = if self.all {
            Selector::All
        } else if let Some(t) = &self.tag {
            Selector::Tag(t.clone())
        } else if !self.id.is_empty() {
            Selector::Ids(self.id.clone())
        } else if let Some(t) = &file.tag {
            Selector::Tag(t.clone())
        } else if let Some(ids) = file.ids.clone().filter(|v| !v.is_empty()) {
            Selector::Ids(ids)
        } else if file.all == Some(true) {
            Selector::All
        } else {
            return Err(CliError::Usage("select entries with --all, --tag or --id".into()));
        };
        let range = |flag: &Option<String>, file: &Option<String>, default: &str| {
            parse_range(flag.as_deref().or(file.as_deref()).unwrap_or(default))
        };
        let env_workers = env_workers
            .map(|w| {
                w.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Config(format!("{} must be a count, got `{w}`", super::WORKERS_ENV)))
            })
            .transpose()?;
        let workers = self
            .workers
            .or(file.workers)
            .or(env_workers)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1);
        Ok(VerifyConfig {
            selector,
            r: range(&self.r, &file.r, "1..4")?,
            n: range(&self.n, &file.n, "0..20")?,
            format: match self.format {
                Some(f) => f,
                None => file.format()?.unwrap_or_default(),
            },
            fail_fast: self.fail_fast || file.fail_fast == Some(true),
            workers,
            header: !(self.no_header || file.no_header == Some(true)),
        })
    }
}

impl Cli {
    pub fn resolve(&self, env_workers: Option<&str>) -> Result<CliConfig, CliError> {
        Ok(match &self.command {
            Command::List { tag, format } => CliConfig::List {
                tag: tag.clone(),
                format: *format,
            },
            Command::Verify(v) => CliConfig::Verify(v.resolve(env_workers)?),
            Command::Eval { seq, index, binet } => CliConfig::Eval {
                sequence: parse_spec(seq)?,
                index: *index,
                binet: *binet,
            },
            Command::Conv { x, y, r, n, weight } => {
                if *n < 0 {
                    return Err(CliError::Usage("--n must be non-negative".into()));
                }
                CliConfig::Conv {
                    x: named(x)?,
                    y: named(y)?,
                    r: *r,
                    n: *n,
                    weight: *weight,
                }
            }
            Command::Cheb { kind, degree, at } => CliConfig::Cheb {
                kind: *kind,
                degree: *degree,
                at: at.clone(),
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<CliConfig, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("seqconv").chain(args.iter().copied()))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        cli.resolve(None)
    }

    #[test]
    fn verify_defaults() {
        let CliConfig::Verify(v) = parse(&["verify", "--all", "--workers", "1"]).unwrap() else {
            panic!("not verify")
        };
        assert_eq!((v.r, v.n), (1..=4, 0..=20));
        assert_eq!(v.selector, Selector::All);
        assert!(v.header && !v.fail_fast);
    }

    #[test]
    fn negative_ranges_and_env_workers() {
        let cli = Cli::try_parse_from(["seqconv", "verify", "--tag", "horadam", "--r", "-4..-1"]).unwrap();
        let CliConfig::Verify(v) = cli.resolve(Some("3")).unwrap() else {
            panic!()
        };
        assert_eq!((v.r, v.workers), (-4..=-1, 3));
        assert!(cli.resolve(Some("many")).is_err());
    }

    #[test]
    fn usage_errors() {
        assert!(parse(&["verify"]).is_err());
        assert!(parse(&["verify", "--all", "--n", "5..1"]).is_err());
        assert!(parse(&["verify", "--all", "--tag", "x"]).is_err());
        assert!(parse(&["eval", "--sequence", "tribonacci", "--index", "3"]).is_err());
        assert!(parse(&["eval", "--params", "1,2,3", "--index", "3"]).is_err());
    }

    #[test]
    fn eval_and_cheb() {
        let c = parse(&["eval", "--params", "1/2,1,3,-2", "--index", "-1"]).unwrap();
        assert!(matches!(c, CliConfig::Eval { index: -1, .. }));
        let c = parse(&["cheb", "--kind", "u", "--degree", "2", "--at", "-1/2"]).unwrap();
        assert!(matches!(
            c,
            CliConfig::Cheb {
                kind: ChebKind::Second,
                degree: 2,
                at: Some(_)
            }
        ));
    }
}
