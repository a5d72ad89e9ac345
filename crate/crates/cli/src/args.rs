use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "nbody", version, about = "Exact checks for the radial n-body Laplacian")]
pub struct Cli {
    /// Write every golden fixture into this directory and exit.
    #[arg(long, value_name = "DIR")]
    pub emit_fixtures: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an object and report it.
    Build {
        kind: BuildKind,
        #[command(flatten)]
        opts: Options,
    },
    /// Run a check.
    Verify {
        kind: VerifyKind,
        #[command(flatten)]
        opts: Options,
    },
    /// Exact or finite-difference spectra.
    Spectrum {
        kind: SpectrumKind,
        #[command(flatten)]
        opts: Options,
    },
    /// Infinite-mass limits.
    Limit {
        kind: LimitKind,
        #[command(flatten)]
        opts: Options,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuildKind {
    DeltaRad,
    Metric,
    Volumes,
    Jacobi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyKind {
    Conjecture2,
    Conjecture3,
    SplitOracle,
    Selfadjoint,
    Positivity,
    Symmetries,
    SlDecomposition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumKind {
    Harmonic,
    FdOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitKind {
    Freeze,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Symbolic,
    Points,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// Number of particles.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated rational masses, e.g. `1,3/2,2`; default all ones.
    #[arg(long)]
    pub masses: Option<String>,
    /// Space dimension; default `n`.
    #[arg(long)]
    pub d: Option<i64>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random points use numerators and denominators in `1..=bound`.
    #[arg(long)]
    pub bound: Option<u64>,
    /// Degree cap: test polynomials of the oracle, or `N` of `P_N`.
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Gauge vector for `spectrum harmonic`, one entry or one per pair.
    #[arg(long)]
    pub a: Option<String>,
    /// Oscillator strength for two bodies.
    #[arg(long)]
    pub omega: Option<String>,
    /// Number of finite-difference eigenvalues.
    #[arg(long)]
    pub k_max: Option<usize>,
    /// Comma-separated particles (1-based) sent to infinite mass.
    #[arg(long)]
    pub frozen: Option<String>,
    /// JSON file whose fields override the flags.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Print a plain-text rendering to standard output.
    #[arg(long)]
    pub print: bool,
    /// Record `elapsed_ms` in the report.
    #[arg(long)]
    pub timing: bool,
}
