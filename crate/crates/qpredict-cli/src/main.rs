//! `qpredict` — single-state analysis, parameter sweeps and oracle
//! cross-checks for two-qubit predictability measures.
//!
//! Exit codes: 0 ok, 1 oracle violation, 2 parse error, 3 non-physical
//! state, 4 I/O error.

mod oracle;
mod report;
mod sweep;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qpredict", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one state file and print a JSON report.
    State {
        /// Path to a state JSON file {"t_a":[..],"t_b":[..],"c":[[..],..]}.
        path: PathBuf,
        /// Points for the Haar-average quadrature fallback.
        #[arg(long, default_value_t = qpredict::DEFAULT_QUAD_N)]
        quad_n: usize,
    },
    /// Sweep a state family over a grid and write one CSV row per point.
    Sweep {
        /// Family to sweep.
        #[arg(long, value_enum)]
        family: Option<sweep::Family>,
        /// Per-axis grid as min:max:count (repeat per axis, in order).
        #[arg(long)]
        grid: Vec<String>,
        /// Quantities to evaluate (comma separated).
        #[arg(long, value_delimiter = ',')]
        quantities: Vec<sweep::Quantity>,
        /// Output CSV path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Points for the Haar-average quadrature fallback.
        #[arg(long)]
        quad_n: Option<usize>,
        /// Seed recorded with the sweep (reserved for stochastic
        /// quantities; current quantities are deterministic).
        #[arg(long)]
        seed: Option<u64>,
        /// Alternatively, read the whole sweep specification from JSON.
        #[arg(long, conflicts_with_all = ["family", "grid", "quantities", "out", "quad_n", "seed"])]
        spec: Option<PathBuf>,
    },
    /// Run a brute-force/quadrature cross-check suite on random states.
    Oracle {
        #[arg(long, value_enum)]
        suite: OracleSuite,
        /// Number of random states.
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum OracleSuite {
    /// Analytic minimizers against brute-force sphere search.
    Results12,
    /// Haar-average closed forms against lattice quadrature.
    Averages,
    /// Optimized key-rate bound against BB84 and random pairs.
    Qkd,
}

pub const EXIT_ORACLE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_NONPHYSICAL: u8 = 3;
pub const EXIT_IO: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::State { path, quad_n } => report::run(&path, quad_n),
        Command::Sweep {
            family,
            grid,
            quantities,
            out,
            quad_n,
            seed,
            spec,
        } => sweep::run(sweep::CliArgs {
            family,
            grid,
            quantities,
            out,
            quad_n,
            seed,
            spec,
        }),
        Command::Oracle { suite, n, seed } => oracle::run(suite, n, seed),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::Parse(_) => EXIT_PARSE,
        CliError::NonPhysical(_) => EXIT_NONPHYSICAL,
        CliError::Io(_) => EXIT_IO,
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    NonPhysical(String),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse: {m}"),
            CliError::NonPhysical(m) => write!(f, "non-physical state: {m}"),
            CliError::Io(m) => write!(f, "io: {m}"),
        }
    }
}

impl From<qpredict::Error> for CliError {
    fn from(e: qpredict::Error) -> Self {
        match e {
            qpredict::Error::Parse(m) => CliError::Parse(m),
            qpredict::Error::NonPhysical(m) => CliError::NonPhysical(m),
            other => CliError::Parse(other.to_string()),
        }
    }
}

/// 17-significant-digit decimal rendering; NaN prints as the literal
/// "nan" so guarded singular points stay machine-readable.
pub fn fmt_value(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.16e}")
    }
}
