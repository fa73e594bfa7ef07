//! Command-line front end.
//!
//! Four subcommands share one flag vocabulary; every flag can also come
//! from a JSON config file (`--config`), with flags winning field by
//! field. Exit codes: 0 success, 1 usage or configuration error, 2
//! numerical failure, 3 benchmark regression (the report is still
//! written in that case).

pub mod commands;
pub mod config;
pub mod emit;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use config::{FileConfig, FlagOverrides, FormatChoice, ModeChoice, ProblemChoice, RunConfig};

#[derive(Parser)]
#[command(
    name = "hbim",
    version,
    about = "Polynomial-profile conduction solver: exponents, profiles, error metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve for the profile exponent of a boundary problem
    Solve(CommonArgs),
    /// Tabulate approximate and exact temperature profiles
    Profile(CommonArgs),
    /// Integral mismatch metrics between profile and exact solution
    Error(CommonArgs),
    /// Run the full benchmark suite with built-in regression checks
    Bench(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// JSON config file; flags given here override its fields
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Boundary problem
    #[arg(long, value_enum)]
    problem: Option<ProblemChoice>,
    /// Thermal conductivity
    #[arg(long)]
    lambda: Option<f64>,
    /// Density
    #[arg(long)]
    rho: Option<f64>,
    /// Specific heat capacity
    #[arg(long)]
    cp: Option<f64>,
    /// Thermal diffusivity; alone it fixes the medium in the unit gauge
    #[arg(long)]
    alpha: Option<f64>,
    /// Surface temperature
    #[arg(long)]
    ts: Option<f64>,
    /// Far-field temperature
    #[arg(long)]
    tinf: Option<f64>,
    /// Prescribed surface flux
    #[arg(long)]
    flux: Option<f64>,
    /// Layer thickness of the over-specified problem
    #[arg(long)]
    h0: Option<f64>,
    /// Sphere radius
    #[arg(long)]
    r0: Option<f64>,
    /// Time points, comma separated, strictly ascending
    #[arg(long = "time", value_delimiter = ',', value_name = "T1,T2,...")]
    times: Option<Vec<f64>>,
    /// Position points (depth below the surface), comma separated
    #[arg(long = "x", value_delimiter = ',', value_name = "X1,X2,...")]
    xs: Option<Vec<f64>>,
    /// Error-metric comparator mode
    #[arg(long, value_enum)]
    mode: Option<ModeChoice>,
    /// Exponents for the error table, comma separated
    #[arg(long = "n", value_delimiter = ',', value_name = "N1,N2,...")]
    ns: Option<Vec<f64>>,
    /// Named row set for the error table (only "paper" exists)
    #[arg(long)]
    rows: Option<String>,
    /// Two exponents a,b; prints E(a), E(b) and their relative gap
    #[arg(long, value_delimiter = ',', value_name = "A,B")]
    ratio: Option<Vec<f64>>,
    /// Append derived columns (heat defect, residual functional)
    #[arg(long)]
    derived: bool,
    /// Quadrature tolerance for the integral metrics
    #[arg(long)]
    tol: Option<f64>,
    /// Output format
    #[arg(long, value_enum)]
    format: Option<FormatChoice>,
    /// Write output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Omit the timestamp from JSON output (for byte-stable runs)
    #[arg(long)]
    no_metadata: bool,
    /// Worker threads for the benchmark tables
    #[arg(long)]
    threads: Option<usize>,
}

impl CommonArgs {
    fn overrides(&self) -> FlagOverrides {
        FlagOverrides {
            problem: self.problem,
            lambda: self.lambda,
            rho: self.rho,
            cp: self.cp,
            alpha: self.alpha,
            ts: self.ts,
            tinf: self.tinf,
            flux: self.flux,
            h0: self.h0,
            r0: self.r0,
            times: self.times.clone(),
            xs: self.xs.clone(),
            mode: self.mode,
            ns: self.ns.clone(),
            rows: self.rows.clone(),
            ratio: self.ratio.clone(),
            derived: self.derived,
            tol: self.tol,
            format: self.format,
            out: self.out.clone(),
            no_metadata: self.no_metadata,
            threads: self.threads,
        }
    }
}

/// Exit code for a failed run. Numerical failures are distinguishable
/// from configuration mistakes by code alone.
fn code_for(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. }
        | Error::Divergence { .. }
        | Error::NoBracket { .. }
        | Error::NonFinite { .. } => 2,
        _ => 1,
    }
}

/// Parse arguments, run the selected subcommand, return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let (common, handler): (&CommonArgs, fn(&RunConfig) -> crate::error::Result<i32>) =
        match &cli.command {
            Command::Solve(a) => (a, commands::cmd_solve),
            Command::Profile(a) => (a, commands::cmd_profile),
            Command::Error(a) => (a, commands::cmd_error),
            Command::Bench(a) => (a, commands::cmd_bench),
        };
    let file = match &common.config {
        Some(path) => FileConfig::load(path),
        None => Ok(FileConfig::default()),
    };
    let outcome = file
        .and_then(|f| config::resolve(common.overrides(), f))
        .and_then(|cfg| handler(&cfg));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            code_for(&e)
        }
    }
}
