use std::path::Path;

use nbody_core::algebra::{int, parse_rational, Rational, DEFAULT_BOUND};
use nbody_core::model::MassConfig;
use nbody_core::verify::Mode;
use serde::{Deserialize, Serialize};

use crate::args::{BuildKind, LimitKind, ModeArg, Options, SpectrumKind, VerifyKind};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "group", content = "kind", rename_all = "kebab-case")]
pub enum Task {
    Build(BuildKind),
    Verify(VerifyKind),
    Spectrum(SpectrumKind),
    Limit(LimitKind),
}

impl Task {
    pub fn name(&self) -> String {
        let v = serde_json::to_value(self).expect("task serializes");
        format!("{} {}", v["group"].as_str().unwrap_or(""), v["kind"].as_str().unwrap_or(""))
    }
}

/// Fully resolved run: every default filled in, echoed into the report.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub task: Task,
    pub n: usize,
    #[serde(with = "nbody_core::algebra::rational::vec_as_string")]
    pub masses: Vec<Rational>,
    pub d: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    pub trials: usize,
    pub seed: u64,
    pub bound: u64,
    pub max_degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<String>,
    pub k_max: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub frozen: Vec<usize>,
    #[serde(skip)]
    pub print: bool,
    #[serde(skip)]
    pub timing: bool,
}

/// Fields accepted from `--config`; rationals must be strings.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    n: Option<usize>,
    masses: Option<Vec<String>>,
    d: Option<i64>,
    mode: Option<ModeArg>,
    trials: Option<usize>,
    seed: Option<u64>,
    bound: Option<u64>,
    max_degree: Option<u32>,
    a: Option<Vec<String>>,
    omega: Option<String>,
    k_max: Option<usize>,
    frozen: Option<Vec<usize>>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn rational_list(text: &str) -> Result<Vec<String>, CliError> {
    let items: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    if items.iter().any(String::is_empty) {
        return Err(usage(format!("empty entry in list '{text}'")));
    }
    Ok(items)
}

fn parse_all(items: &[String], what: &str) -> Result<Vec<Rational>, CliError> {
    items
        .iter()
        .map(|s| parse_rational(s).map_err(|e| usage(format!("{what}: {e}"))))
        .collect()
}

fn load_file(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("bad config {}: {e}", path.display())))
}

impl RunConfig {
    pub fn resolve(task: Task, opts: &Options) -> Result<RunConfig, CliError> {
        let file = match &opts.config {
            Some(p) => load_file(p)?,
            None => FileConfig::default(),
        };
        let n = file.n.or(opts.n).ok_or_else(|| usage("--n is required"))?;
        if n < 2 {
            return Err(usage("n must be at least 2"));
        }
        let mass_strings = match (file.masses, &opts.masses) {
            (Some(m), _) => m,
            (None, Some(text)) => rational_list(text)?,
            (None, None) => vec!["1".to_string(); n],
        };
        let masses = parse_all(&mass_strings, "masses")?;
        let d = file.d.or(opts.d).unwrap_or(n as i64);
        let mode_arg = file.mode.or(opts.mode);
        let a_strings = match (file.a, &opts.a) {
            (Some(a), _) => Some(a),
            (None, Some(text)) => Some(rational_list(text)?),
            _ => None,
        };
        if let Some(a) = &a_strings {
            parse_all(a, "a")?;
        }
        let omega = file.omega.or_else(|| opts.omega.clone());
        if let Some(w) = &omega {
            parse_rational(w).map_err(|e| usage(format!("omega: {e}")))?;
        }
        let frozen = match (file.frozen, &opts.frozen) {
            (Some(f), _) => f,
            (None, Some(text)) => text
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| usage(format!("bad particle index '{s}'"))))
                .collect::<Result<_, _>>()?,
            (None, None) => Vec::new(),
        };

        let symbolic_default = if n <= 4 { Mode::Symbolic } else { Mode::Points };
        let mode = match task {
            Task::Verify(VerifyKind::Conjecture2) | Task::Verify(VerifyKind::Selfadjoint) => Some(match mode_arg {
                Some(ModeArg::Symbolic) => Mode::Symbolic,
                Some(ModeArg::Points) => Mode::Points,
                None => symbolic_default,
            }),
            _ => None,
        };
        let default_trials = match task {
            Task::Verify(VerifyKind::SplitOracle) => 20,
            Task::Verify(VerifyKind::Positivity) => 50,
            Task::Verify(VerifyKind::Conjecture2) | Task::Verify(VerifyKind::Selfadjoint) if mode == Some(Mode::Points) => 100,
            _ => 0,
        };
        let default_degree = match task {
            Task::Verify(VerifyKind::SplitOracle) => 2,
            Task::Verify(VerifyKind::SlDecomposition) => 4,
            _ => 5,
        };
        let cfg = RunConfig {
            task,
            n,
            masses,
            d,
            mode,
            trials: file.trials.or(opts.trials).unwrap_or(default_trials),
            seed: file.seed.or(opts.seed).unwrap_or(0),
            bound: file.bound.or(opts.bound).unwrap_or(DEFAULT_BOUND),
            max_degree: file.max_degree.or(opts.max_degree).unwrap_or(default_degree),
            a: a_strings,
            omega,
            k_max: file.k_max.or(opts.k_max).unwrap_or(6),
            frozen,
            print: opts.print,
            timing: opts.timing,
        };
        cfg.mass_config()?;
        if cfg.bound == 0 {
            return Err(usage("bound must be positive"));
        }
        if cfg.frozen.iter().any(|&q| q == 0 || q > n) {
            return Err(usage(format!("frozen particles must lie in 1..={n}")));
        }
        Ok(cfg)
    }

    /// The validated masses and dimension.
    pub fn mass_config(&self) -> Result<MassConfig, CliError> {
        MassConfig::new(self.n, self.masses.clone(), self.d).map_err(|e| usage(e.to_string()))
    }

    pub fn gauge(&self) -> Result<Option<Vec<Rational>>, CliError> {
        self.a.as_ref().map(|a| parse_all(a, "a")).transpose()
    }

    pub fn omega(&self) -> Result<Option<Rational>, CliError> {
        self.omega
            .as_ref()
            .map(|w| parse_rational(w).map_err(|e| usage(format!("omega: {e}"))))
            .transpose()
    }

    pub fn omega_or_one(&self) -> Result<Rational, CliError> {
        Ok(self.omega()?.unwrap_or_else(|| int(1)))
    }
}
