//! `tspectra`: batch eigenvalue/eigenvector runs for self-adjoint Toeplitz
//! operators constrained to the annulus and two-point-disc function algebras.
//!
//! Subcommands: `annulus` and `neil` run a configured pipeline and emit a
//! JSON report (plus an optional CSV of the per-parameter rows); `selftest`
//! runs the built-in exact-identity suite.  Exit codes: 0 on success, 1 when
//! a verification or self-test check fails, 2 on configuration errors.

mod config;
mod report;
mod run;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::config::Mode;
use crate::report::emit_json;
use crate::run::{apply_overrides, execute, load_config, CliError, Overrides};

#[derive(Debug, Parser)]
#[command(
    name = "tspectra",
    version,
    about = "Eigenvalue reports for algebra-constrained self-adjoint Toeplitz operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the annulus pipeline from a JSON configuration.
    Annulus(RunArgs),
    /// Run the two-point disc pipeline from a JSON configuration.
    Neil(RunArgs),
    /// Run the built-in verification suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Path to the JSON run configuration.
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also write the per-parameter rows as CSV.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Override the number of boundary samples (power of two, at least 8).
    #[arg(long = "n-points", value_name = "N")]
    n_points: Option<usize>,
    /// Override the truncation half-width.
    #[arg(long = "K", value_name = "K")]
    k: Option<usize>,
    /// Override the number of spectral-parameter samples.
    #[arg(long = "lambda-count", value_name = "COUNT")]
    lambda_count: Option<usize>,
    /// Scan weight-coefficient phases instead of using the configured value.
    #[arg(long = "c-scan")]
    c_scan: bool,
    /// Reserved; all computation is deterministic.
    #[arg(long, value_name = "SEED")]
    #[allow(dead_code)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Multiply every check tolerance by this factor (testing hook).
    #[arg(
        long = "tolerance-scale",
        value_name = "SCALE",
        default_value_t = 1.0,
        hide = true
    )]
    tolerance_scale: f64,
    /// Reserved; all computation is deterministic.
    #[arg(long, value_name = "SEED")]
    #[allow(dead_code)]
    seed: Option<u64>,
}

fn run_pipeline(mode: Mode, args: &RunArgs) -> Result<(), CliError> {
    let config = load_config(&args.config)?;
    if config.mode != mode {
        return Err(CliError::Config(format!(
            "config declares mode \"{}\" but the {} subcommand was invoked",
            config.mode.name(),
            mode.name(),
        )));
    }
    let overrides = Overrides {
        n_points: args.n_points,
        k: args.k,
        lambda_count: args.lambda_count,
        c_scan: args.c_scan,
        out: args.out.clone(),
        csv: args.csv.clone(),
    };
    let config = apply_overrides(config, &overrides)?;
    execute(&config)
}

fn run_selftest_command(args: &SelftestArgs) -> Result<(), CliError> {
    let report = selftest::run_selftest(args.tolerance_scale)?;
    emit_json(&report, args.out.as_deref()).map_err(CliError::Config)?;
    eprintln!("{}", selftest::summarize(&report));
    if report.passed {
        Ok(())
    } else {
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        Err(CliError::Failure(format!(
            "selftest failed: {}",
            failing.join(", ")
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Annulus(args) => run_pipeline(Mode::Annulus, args),
        Command::Neil(args) => run_pipeline(Mode::Neil, args),
        Command::Selftest(args) => run_selftest_command(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
