//! `latcoh`: lattice cohomology of curve germs from the command line.
//!
//! Exit codes: 0 success, 1 property violation, 2 input error, 3 negative
//! verdict.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "latcoh",
    version,
    about = "Lattice cohomology of curve singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants, weights, graded root and module of a numerical semigroup.
    Semigroup(SemigroupArgs),
    /// Recover a plane-branch semigroup from its module.
    Reconstruct(ReconstructArgs),
    /// Hilbert function, weight grid and lattice cohomology of a parametrized curve.
    Curve(CurveArgs),
    /// Check semigroup -> module -> semigroup for every plane-branch semigroup up to a conductor.
    Roundtrip(SweepArgs),
    /// Compare two graded roots up to isomorphism.
    RootIso(RootIsoArgs),
    /// Look for branch semigroups with equal modules but different roots.
    ConjectureSweep(SweepArgs),
}

#[derive(clap::Args, Debug)]
pub struct SemigroupArgs {
    /// Comma-separated generators, e.g. 6,10,31.
    #[arg(
        long,
        value_delimiter = ',',
        required_unless_present = "input",
        conflicts_with = "input"
    )]
    gens: Vec<u64>,
    /// Semigroup JSON file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[command(flatten)]
    out: OutArgs,
    /// Weight table as TSV.
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Graded root, format from --root-format or the file extension.
    #[arg(long)]
    root: Option<PathBuf>,
    #[arg(long, value_enum)]
    root_format: Option<RootFormat>,
    /// Module JSON.
    #[arg(long)]
    module: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct ReconstructArgs {
    #[arg(long)]
    module: PathBuf,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(clap::Args, Debug)]
pub struct CurveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Initial truncation length per branch; doubled until the conductor is certified.
    #[arg(long)]
    bound: Option<usize>,
    /// Known conductor, e.g. 4,4; checked against the computation.
    #[arg(long, value_delimiter = ',')]
    conductor: Option<Vec<u64>>,
    #[command(flatten)]
    out: OutArgs,
    /// Weight grid on the conductor box as TSV.
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Full cohomology data as JSON.
    #[arg(long)]
    cohomology: Option<PathBuf>,
    #[arg(long)]
    root: Option<PathBuf>,
    #[arg(long, value_enum)]
    root_format: Option<RootFormat>,
}

#[derive(clap::Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    max_conductor: u64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(clap::Args, Debug)]
pub struct RootIsoArgs {
    a: PathBuf,
    b: PathBuf,
}

#[derive(clap::Args, Debug)]
pub struct OutArgs {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RootFormat {
    Dot,
    Ascii,
    Json,
}

/// What a command concluded, apart from hard input errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Violation,
    Negative,
}

/// Hard failures: bad input (exit 2) or an internal error (exit 1).
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure::Internal(err)
    }
}

pub trait InputContext<T> {
    fn input(self, context: impl std::fmt::Display + Send + Sync + 'static) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> InputContext<T> for Result<T, E> {
    fn input(self, context: impl std::fmt::Display + Send + Sync + 'static) -> Result<T, Failure> {
        self.map_err(|e| Failure::Input(e.into().context(context)))
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(value) = std::env::var("LATCOH_THREADS") {
        let n: usize = value.trim().parse().map_err(|_| {
            anyhow::anyhow!("LATCOH_THREADS must be a positive integer, got {value:?}")
        })?;
        anyhow::ensure!(n > 0, "LATCOH_THREADS must be positive");
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    configure_threads().input("configuring threads")?;
    match cli.command {
        Command::Semigroup(a) => commands::semigroup(a),
        Command::Reconstruct(a) => commands::reconstruct(a),
        Command::Curve(a) => commands::curve(a),
        Command::Roundtrip(a) => commands::roundtrip(a),
        Command::RootIso(a) => commands::root_iso(a),
        Command::ConjectureSweep(a) => commands::conjecture_sweep(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Ok(Outcome::Negative) => ExitCode::from(3),
        Err(Failure::Input(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(err)) => {
            eprintln!("internal error: {err:#}");
            ExitCode::from(1)
        }
    }
}
