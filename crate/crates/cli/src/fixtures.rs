use std::path::Path;

use crate::{run_args, CliError};

#[derive(Debug, Clone, Copy)]
pub struct FixtureCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

const CASES: &[FixtureCase] = &[
    FixtureCase { name: "build_delta_rad", args: &["build", "delta-rad", "--n", "3", "--masses", "2,3,5", "--d", "2"] },
    FixtureCase { name: "build_metric", args: &["build", "metric", "--n", "3", "--masses", "1,2,3", "--d", "3"] },
    FixtureCase { name: "build_volumes", args: &["build", "volumes", "--n", "4", "--d", "3"] },
    FixtureCase { name: "build_jacobi", args: &["build", "jacobi", "--n", "3", "--masses", "1,2,3", "--d", "3"] },
    FixtureCase {
        name: "verify_conjecture2",
        args: &["verify", "conjecture2", "--n", "3", "--masses", "2,3,5", "--d", "3", "--mode", "symbolic"],
    },
    FixtureCase {
        name: "verify_conjecture2_points",
        args: &["verify", "conjecture2", "--n", "5", "--mode", "points", "--trials", "3", "--seed", "7", "--bound", "50"],
    },
    FixtureCase { name: "verify_conjecture3", args: &["verify", "conjecture3", "--n", "3", "--masses", "1,2,3", "--d", "4"] },
    FixtureCase {
        name: "verify_split_oracle",
        args: &["verify", "split-oracle", "--n", "3", "--masses", "1,2,3", "--d", "2", "--trials", "3", "--seed", "1", "--max-degree", "2"],
    },
    FixtureCase {
        name: "verify_selfadjoint",
        args: &["verify", "selfadjoint", "--n", "3", "--masses", "1,2,3", "--d", "3", "--mode", "symbolic"],
    },
    FixtureCase { name: "verify_positivity", args: &["verify", "positivity", "--n", "4", "--d", "3", "--trials", "3", "--seed", "2"] },
    FixtureCase { name: "verify_symmetries", args: &["verify", "symmetries", "--n", "3", "--masses", "2,3,5", "--d", "3"] },
    FixtureCase { name: "verify_sl_decomposition", args: &["verify", "sl-decomposition", "--n", "3", "--d", "3", "--max-degree", "3"] },
    FixtureCase {
        name: "spectrum_harmonic",
        args: &["spectrum", "harmonic", "--n", "2", "--d", "3", "--a", "1/2", "--max-degree", "5"],
    },
    FixtureCase { name: "spectrum_fd_oracle", args: &["spectrum", "fd-oracle", "--n", "2", "--d", "3", "--omega", "1", "--k-max", "3"] },
    FixtureCase { name: "limit_freeze", args: &["limit", "freeze", "--n", "3", "--d", "3", "--frozen", "1"] },
];

pub fn fixture_cases() -> &'static [FixtureCase] {
    CASES
}

/// Runs every fixture case and writes `<name>.json` into `dir`.
pub fn emit_fixtures(dir: &Path) -> Result<usize, CliError> {
    std::fs::create_dir_all(dir)?;
    for case in CASES {
        let outcome = run_args(case.args.iter().copied())?;
        std::fs::write(dir.join(format!("{}.json", case.name)), outcome.to_json(None))?;
    }
    Ok(CASES.len())
}
