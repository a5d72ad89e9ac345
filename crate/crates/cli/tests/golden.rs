use std::collections::BTreeSet;
use std::path::PathBuf;

use nbody_cli::{fixture_cases, run_args};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn reports_match_golden_files() {
    for case in fixture_cases() {
        let want = std::fs::read_to_string(golden_dir().join(format!("{}.json", case.name)))
            .unwrap_or_else(|e| panic!("{}: {e}", case.name));
        let got = run_args(case.args.iter().copied()).unwrap().to_json(None);
        assert_eq!(got, want, "fixture {} drifted", case.name);
    }
}

#[test]
fn every_subcommand_has_a_fixture() {
    let covered: BTreeSet<String> = fixture_cases().iter().map(|c| format!("{} {}", c.args[0], c.args[1])).collect();
    let all = [
        "build delta-rad",
        "build metric",
        "build volumes",
        "build jacobi",
        "verify conjecture2",
        "verify conjecture3",
        "verify split-oracle",
        "verify selfadjoint",
        "verify positivity",
        "verify symmetries",
        "verify sl-decomposition",
        "spectrum harmonic",
        "spectrum fd-oracle",
        "limit freeze",
    ];
    for cmd in all {
        assert!(covered.contains(cmd), "no fixture for {cmd}");
    }
}

#[test]
fn golden_reports_all_pass() {
    for case in fixture_cases() {
        assert!(run_args(case.args.iter().copied()).unwrap().pass(), "{}", case.name);
    }
}
