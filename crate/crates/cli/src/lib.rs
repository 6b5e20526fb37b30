//! Command-line front end for `dynamo-core`.
//!
//! Every subcommand writes one pretty-printed JSON document to standard
//! output; logs go to standard error. Exit codes: 0 on success, 1 when a
//! checked property fails, 2 on usage or input errors.

pub mod audit;
pub mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use audit::{AuditConfig, AuditReport, CheckSummary, Counterexample};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] dynamo_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Result of one invocation: the document for standard output and the
/// process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

#[derive(Debug, Parser)]
#[command(name = "dynamo", version, about = "Dynamic monopolies under threshold activation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Materialize a threshold assignment for a graph.
    Thresholds(ThresholdsArgs),
    /// Run the activation process from a seed set.
    Simulate(SimulateArgs),
    /// Search for a dynamo.
    Find(FindArgs),
    /// Report lower and upper bounds on the minimum dynamo size.
    Bounds(BoundsArgs),
    /// Cross-check library properties on random and enumerated corpora.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// complete | path | cycle | star | circulant | gnp | gn
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of leaves for `star`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Edge probability for `gnp`.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated offsets for `circulant`.
    #[arg(long)]
    pub offsets: Option<String>,
    /// Write the graph here instead of embedding it in the output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// For `gn`, also write its canonical thresholds here.
    #[arg(long)]
    pub thresholds_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ThresholdsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// strict-majority | simple-majority | degree | constant:<k> | file:<path>
    #[arg(long)]
    pub rule: String,
    /// Write the assignment here instead of embedding it in the output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value = "strict-majority")]
    pub thresholds: String,
    /// Comma-separated seed vertices.
    #[arg(long)]
    pub seed: String,
}

#[derive(Debug, Args)]
pub struct FindArgs {
    /// ordering | greedy | exact
    #[arg(long)]
    pub strategy: String,
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value = "strict-majority")]
    pub thresholds: String,
    /// Propagation budget for the exact search.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Emit the ordering certificate too (ordering strategy only).
    #[arg(long)]
    pub certificate: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value = "strict-majority")]
    pub thresholds: String,
    /// Also compute vertex-cover and chromatic bounds (exponential time).
    #[arg(long)]
    pub heavy: bool,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    pub checks: String,
    /// Range of n for the `kn` check, as `lo..hi` (inclusive).
    #[arg(long, default_value = "3..8")]
    pub n_range: String,
    /// Propagation budget per exact search; exhausted instances are skipped.
    #[arg(long, default_value_t = 5_000_000)]
    pub budget: u64,
}

/// Parse `argv` (including the program name) and run it.
pub fn run_args<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            Outcome {
                code,
                stdout: String::new(),
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Gen(a) => commands::gen(&a),
        Command::Thresholds(a) => commands::thresholds(&a),
        Command::Simulate(a) => commands::simulate(&a),
        Command::Find(a) => commands::find(&a),
        Command::Bounds(a) => commands::bounds(&a),
        Command::Audit(a) => commands::audit(&a),
    };
    match result {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            Outcome {
                code: 2,
                stdout: String::new(),
            }
        }
    }
}
