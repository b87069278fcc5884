//! `tdde`: simulate, fit and rank with the time-reversed influence model.

mod commands;
mod error;
mod format;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tdde_core::FdMode;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "tdde", version, about = "Time-reversed delay-differential influence model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate p(t) on a uniform grid and write `t,p` CSV.
    Simulate(SimulateArgs),
    /// Fit a, b and the mode amplitudes to a `t,p` CSV; writes JSON.
    Fit(FitArgs),
    /// Rank journals with the recursive L1-norm SVD procedure.
    Rank(RankArgs),
    /// Compare the closed form against the RK4 mirror-system oracle.
    Verify(VerifyArgs),
    /// Article-based publisher goodwill `exp(-art) + alpha(a - b)`.
    Eta(EtaArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SimulateArgs {
    #[arg(long, value_parser = finite)]
    pub a: f64,
    #[arg(long, value_parser = finite)]
    pub b: f64,
    #[arg(long, value_parser = finite)]
    pub p0: f64,
    #[arg(long, value_parser = finite)]
    pub t_min: f64,
    #[arg(long, value_parser = finite)]
    pub t_max: f64,
    /// Number of intervals; `steps + 1` rows are written.
    #[arg(long)]
    pub steps: usize,
    /// Constant editorial reputation.
    #[arg(long, value_parser = finite, group = "theta")]
    pub theta_const: Option<f64>,
    /// Linear editorial reputation `A·t + B`, given as `A,B`.
    #[arg(long, value_parser = pair, allow_hyphen_values = true, value_name = "A,B", group = "theta")]
    pub theta_lin: Option<(f64, f64)>,
    /// Exponential editorial reputation `exp(A·t)`.
    #[arg(long, value_parser = finite, value_name = "A", group = "theta")]
    pub theta_exp: Option<f64>,
    /// Time-exponential goodwill `k·exp(k1·t)`, given as `k,k1`.
    #[arg(long, value_parser = pair, allow_hyphen_values = true, value_name = "K,K1", group = "eta")]
    pub eta_exp: Option<(f64, f64)>,
    /// Article-based goodwill, given as `art,alpha`.
    #[arg(long, value_parser = pair, allow_hyphen_values = true, value_name = "ART,ALPHA", group = "eta")]
    pub eta_article: Option<(f64, f64)>,
    /// Amplitude of `exp(r·t)`; requires --c2.
    #[arg(long, value_parser = finite)]
    pub c1: Option<f64>,
    /// Amplitude of `exp(-r·t)`; requires --c1.
    #[arg(long, value_parser = finite)]
    pub c2: Option<f64>,
    /// Emit oscillatory solutions, flagged as infeasible, instead of failing.
    #[arg(long)]
    pub allow_oscillatory: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct FitArgs {
    /// `t,p` CSV, or `-` for stdin.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "central", value_parser = fd_mode)]
    pub fd: FdMode,
    /// Also evaluate the fitted solution at this time.
    #[arg(long, value_parser = finite)]
    pub predict: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    /// `journal,<feature>...` CSV, or `-` for stdin.
    #[arg(long)]
    pub input: PathBuf,
    /// Lasso response feature; defaults to `CiteScore`, else the first feature.
    #[arg(long)]
    pub response: Option<String>,
    #[arg(long, default_value_t = 0.1, value_parser = finite)]
    pub lambda: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    #[arg(long, value_parser = finite)]
    pub a: f64,
    #[arg(long, value_parser = finite)]
    pub b: f64,
    #[arg(long, value_parser = finite)]
    pub p0: f64,
    #[arg(long, value_parser = finite)]
    pub t_max: f64,
    #[arg(long, value_parser = finite)]
    pub step: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EtaArgs {
    #[arg(long, value_parser = finite)]
    pub art: f64,
    #[arg(long, value_parser = finite)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub a: f64,
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub b: f64,
}

fn finite(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

fn pair(s: &str) -> Result<(f64, f64), String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated numbers, got `{s}`"))?;
    Ok((finite(x)?, finite(y)?))
}

fn fd_mode(s: &str) -> Result<FdMode, String> {
    s.parse()
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Simulate(args) => commands::simulate::run(&args),
        Command::Fit(args) => commands::fit::run(&args),
        Command::Rank(args) => commands::rank::run(&args),
        Command::Verify(args) => commands::verify::run(&args),
        Command::Eta(args) => commands::eta::run(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            eprintln!("{}", CliError::usage(first));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code as u8)
        }
    }
}
