//! `gasep`: build, verify and query finite separating sets of invariants for
//! representations of the additive group.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gasep_core::orbit::Bounds;
use gasep_core::{DedupMode, Execution, RepSpec};

#[derive(Parser, Debug)]
#[command(name = "gasep", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dedup {
    Scalar,
    Exact,
    None,
}

impl From<Dedup> for DedupMode {
    fn from(d: Dedup) -> Self {
        match d {
            Dedup::Scalar => DedupMode::Scalar,
            Dedup::Exact => DedupMode::Exact,
            Dedup::None => DedupMode::None,
        }
    }
}

#[derive(clap::Args, Debug, Clone)]
struct RepArgs {
    /// Summand degrees, e.g. `2,2,3`. Reordered canonically.
    #[arg(long, value_parser = parse_rep)]
    rep: RepSpec,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

impl RepArgs {
    fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the separating set.
    Build {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Dedup::Scalar)]
        dedup: Dedup,
    },
    /// Run verification checks and print the report.
    Verify {
        #[command(flatten)]
        rep: RepArgs,
        /// `all` or a comma-separated subset of
        /// invariance,degree,support,projection,epsilon,separation,counts.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Sampling bounds `NUM,DEN`: numerators in [-NUM, NUM], denominators in [1, DEN].
        #[arg(long, default_value = "9,4", value_parser = parse_bounds)]
        bounds: Bounds,
        #[arg(long, value_enum, default_value_t = Dedup::Scalar)]
        dedup: Dedup,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Record wall time per check (reports are then not reproducible).
        #[arg(long)]
        timings: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Per-family counts and comparison with published sizes.
    Count {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Dedup::Scalar)]
        dedup: Dedup,
    },
    /// Decide whether two points are separated by invariants.
    Oracle {
        #[command(flatten)]
        rep: RepArgs,
        /// JSON point file, `[["1","2"],[...]]` per summand in canonical order.
        v: PathBuf,
        w: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate the separating set, or one polynomial, at a point.
    Eval {
        #[command(flatten)]
        rep: RepArgs,
        point: PathBuf,
        /// Polynomial such as `x[0,1]*x[2,1] - 1/2*x[1,1]^2`.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_rep(s: &str) -> Result<RepSpec, String> {
    s.parse().map_err(|e: gasep_core::Error| e.to_string())
}

fn parse_bounds(s: &str) -> Result<Bounds, String> {
    s.parse().map_err(|e: gasep_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
