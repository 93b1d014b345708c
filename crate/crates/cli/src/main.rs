//! `symprod`: invariant reports and homeomorphism verdicts for
//! Sym^n M_{g,k} × ℝ^N.

mod checks;
mod output;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use symprod::classifier::{compare_reports, report, table, GridRanges, SpaceSpec};
use symprod::{Error, Execution};

use crate::output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "symprod",
    version,
    about = "Invariants of symmetric products of punctured surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for the randomized self-checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Largest n!·(2g+2)^n allowed for projector computations.
    #[arg(long, default_value_t = checks::DEFAULT_MAX_WORK, global = true)]
    max_work: u128,

    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant report for one manifold.
    Report(SpecArgs),
    /// Compare two manifolds.
    Classify(PairArgs),
    /// Reports for every (g, k, n, N) in the given ranges.
    Table(RangeArgs),
    /// Compare Macdonald-monomial spans with projector ranks in every degree.
    OracleCheck(OracleArgs),
    /// Run the built-in consistency checks.
    Selftest,
}

#[derive(Args, Debug)]
struct SpecArgs {
    #[arg(long)]
    g: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long = "N", default_value_t = 0)]
    euclidean: usize,
}

impl SpecArgs {
    fn spec(&self) -> symprod::Result<SpaceSpec> {
        SpaceSpec::new(self.g, self.k, self.n, self.euclidean)
    }
}

#[derive(Args, Debug)]
struct PairArgs {
    #[command(flatten)]
    first: SpecArgs,
    #[arg(long)]
    g2: usize,
    #[arg(long)]
    k2: usize,
    #[arg(long)]
    n2: usize,
    #[arg(long = "N2", default_value_t = 0)]
    euclidean2: usize,
}

/// Inclusive ranges written `a..b`, or a single value.
#[derive(Args, Debug)]
struct RangeArgs {
    #[arg(long, value_parser = parse_range)]
    g: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range)]
    k: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long = "N", value_parser = parse_range, default_value = "0")]
    euclidean: RangeInclusive<usize>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    g: usize,
    #[arg(long)]
    n: usize,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bound = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad bound {t:?}: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (bound(a)?, bound(b.trim_start_matches('='))?),
        None => {
            let v = bound(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

enum Failure {
    Usage(anyhow::Error),
    Invariant(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::WorkCapExceeded { .. } => Failure::Usage(e.into()),
            other => Failure::Invariant(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Invariant(e)
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match &cli.command {
        Command::Report(a) => {
            let r = report(&a.spec()?)?;
            Ok(output::render_report(&r, cli.format)?)
        }
        Command::Classify(p) => {
            let a = p.first.spec()?;
            let b = SpaceSpec::new(p.g2, p.k2, p.n2, p.euclidean2)?;
            let (ra, rb) = (report(&a)?, report(&b)?);
            let c = compare_reports(&ra, &rb);
            Ok(output::render_comparison(&ra, &rb, &c, cli.format)?)
        }
        Command::Table(r) => {
            let ranges = GridRanges {
                g: r.g.clone(),
                k: r.k.clone(),
                n: r.n.clone(),
                euclidean: r.euclidean.clone(),
            };
            let rows = table(&ranges, exec)?;
            Ok(output::render_table(&rows, cli.format)?)
        }
        Command::OracleCheck(o) => {
            let r = checks::oracle_check(o.g, o.n, cli.max_work, exec)?;
            let text = checks::render_oracle(&r, cli.format)?;
            if r.pass {
                Ok(text)
            } else {
                emit(cli, &text)?;
                Err(Failure::Invariant(anyhow!(
                    "oracle mismatch for g={} n={}",
                    o.g,
                    o.n
                )))
            }
        }
        Command::Selftest => {
            let results = checks::selftest(cli.seed, cli.max_work, exec);
            let text = checks::render_selftest(&results, cli.format)?;
            let failed: Vec<_> = results
                .iter()
                .filter(|r| !r.pass)
                .map(|r| r.check)
                .collect();
            if failed.is_empty() {
                Ok(text)
            } else {
                emit(cli, &text)?;
                Err(Failure::Invariant(anyhow!(
                    "self-checks failed: {}",
                    failed.join(", ")
                )))
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|text| emit(&cli, &text).map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..2").unwrap(), 0..=2);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert_eq!(parse_range("1..=4").unwrap(), 1..=4);
        assert!(parse_range("2..1").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn error_classes() {
        assert!(matches!(
            Failure::from(Error::InvalidParameter("x".into())),
            Failure::Usage(_)
        ));
        assert!(matches!(
            Failure::from(Error::WorkCapExceeded {
                estimate: 2,
                cap: 1
            }),
            Failure::Usage(_)
        ));
        assert!(matches!(
            Failure::from(Error::NotInChiSubring("x".into())),
            Failure::Invariant(_)
        ));
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
