//! Command-line front end: argument parsing, configuration files, dispatch
//! to the checks of `nbody-core`, and golden fixtures.

pub mod args;
mod config;
mod dispatch;
mod fixtures;

use std::path::Path;
use std::time::Instant;

use clap::Parser;

pub use args::Cli;
pub use config::{RunConfig, Task};
pub use dispatch::{run, Outcome};
pub use fixtures::{emit_fixtures, fixture_cases, FixtureCase};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags, bad config file or a configuration outside a routine's
    /// domain; exit code 2.
    #[error("usage: {0}")]
    Usage(String),
    /// A routine failed in a way that is not a plain pass/fail verdict.
    #[error("{0}")]
    Failed(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

/// Resolves a parsed command line into a run configuration.
pub fn resolve(cli: &Cli) -> Result<RunConfig, CliError> {
    use args::Command;
    let (task, opts) = match cli.command.as_ref().ok_or_else(|| CliError::Usage("a subcommand is required".into()))? {
        Command::Build { kind, opts } => (Task::Build(*kind), opts),
        Command::Verify { kind, opts } => (Task::Verify(*kind), opts),
        Command::Spectrum { kind, opts } => (Task::Spectrum(*kind), opts),
        Command::Limit { kind, opts } => (Task::Limit(*kind), opts),
    };
    RunConfig::resolve(task, opts)
}

/// Runs one command line (without the program name) and returns the JSON
/// document and the outcome.
pub fn run_args<I, S>(args: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("nbody")).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
    let cfg = resolve(&cli)?;
    run(&cfg)
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    if let Some(dir) = &cli.emit_fixtures {
        return match emit_fixtures(dir) {
            Ok(n) => {
                eprintln!("wrote {n} fixtures to {}", dir.display());
                0
            }
            Err(e) => {
                eprintln!("{e}");
                e.exit_code()
            }
        };
    }
    let cfg = match resolve(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return e.exit_code();
        }
    };
    let out = match &cli.command {
        Some(args::Command::Build { opts, .. })
        | Some(args::Command::Verify { opts, .. })
        | Some(args::Command::Spectrum { opts, .. })
        | Some(args::Command::Limit { opts, .. }) => opts.out.clone(),
        None => None,
    };
    let start = Instant::now();
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("{e}");
            return e.exit_code();
        }
    };
    let elapsed = cfg.timing.then(|| start.elapsed().as_millis() as u64);
    let json = outcome.to_json(elapsed);
    let written = match &out {
        Some(path) => write_file(path, &json),
        None if !cfg.print => {
            print!("{json}");
            Ok(())
        }
        None => Ok(()),
    };
    if let Err(e) = written {
        eprintln!("{e}");
        return e.exit_code();
    }
    if cfg.print {
        println!("{}", outcome.text);
    }
    outcome.exit_code()
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(CliError::from)
}
