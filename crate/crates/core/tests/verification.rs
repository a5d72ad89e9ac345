use nbody_core::algebra::{frac, int, parse_rational, Rational};
use nbody_core::model::MassConfig;
use nbody_core::verify::*;

fn masses(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&m| int(m)).collect()
}

#[test]
fn three_body_quotient_is_weighted_perimeter() {
    let cfg = MassConfig::new(3, masses(&[2, 3, 5]), 3).unwrap();
    let rep = check_conjecture2(&cfg, Mode::Symbolic, 0, 0, 1000).unwrap();
    assert!(rep.pass());
    assert_eq!(rep.quotient.as_deref(), Some("6 * rho_1_2 + 10 * rho_1_3 + 15 * rho_2_3"));
}

#[test]
fn four_body_symbolic_factorization() {
    let cfg = MassConfig::new(4, masses(&[1, 2, 3, 4]), 3).unwrap();
    let rep = check_conjecture2(&cfg, Mode::Symbolic, 0, 0, 1000).unwrap();
    assert!(rep.pass(), "{:?}", rep.remainder);
    assert_eq!(rep.mode, Mode::Symbolic);
}

#[test]
fn five_body_points() {
    let cfg = MassConfig::equal(5, 4).unwrap();
    let rep = check_conjecture2(&cfg, Mode::Points, 100, 7, 1000).unwrap();
    assert!(rep.pass());
    assert_eq!(rep.c_n, "424673280");
    assert_eq!(rep.points.len(), 100);
}

#[test]
fn six_body_constant_and_points() {
    let cfg = MassConfig::equal(6, 5).unwrap();
    let rep = check_conjecture2(&cfg, Mode::Points, 10, 1, 1000).unwrap();
    assert!(rep.pass());
    // 6 · c₁c₂c₃c₄c₅ with c_k = 2^k (k!)²
    let c: Vec<Rational> = (1..=5u32)
        .map(|k| int(2i64.pow(k) * (1..=k as i64).product::<i64>().pow(2)))
        .collect();
    let product = c.iter().fold(int(6), |a, b| a * b);
    assert_eq!(parse_rational(&rep.c_n).unwrap(), product);
}

#[test]
fn symbolic_passes_replicate_at_points() {
    for (n, m) in [(2, vec![3, 7]), (3, vec![1, 2, 3]), (4, vec![1, 1, 1, 1])] {
        let cfg = MassConfig::new(n, masses(&m), n as i64).unwrap();
        assert!(check_conjecture2(&cfg, Mode::Symbolic, 0, 0, 1000).unwrap().pass());
        assert!(check_conjecture2(&cfg, Mode::Points, 100, 3, 1000).unwrap().pass());
    }
}

#[test]
fn symbolic_mode_ignores_seed() {
    let cfg = MassConfig::new(3, masses(&[1, 4, 9]), 3).unwrap();
    let a = check_conjecture2(&cfg, Mode::Symbolic, 0, 1, 1000).unwrap();
    let b = check_conjecture2(&cfg, Mode::Symbolic, 0, 99, 1000).unwrap();
    assert_eq!(a.quotient, b.quotient);
}

#[test]
fn point_mode_reproducible() {
    let cfg = MassConfig::equal(4, 3).unwrap();
    let a = check_conjecture2(&cfg, Mode::Points, 5, 42, 100).unwrap();
    let b = check_conjecture2(&cfg, Mode::Points, 5, 42, 100).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn symbolic_refused_above_four() {
    let cfg = MassConfig::equal(5, 4).unwrap();
    assert!(matches!(check_conjecture2(&cfg, Mode::Symbolic, 1, 0, 10), Err(VerifyError::Unsupported(_))));
}

#[test]
fn two_body_gauge_all_dimensions() {
    for rep in check_conjecture3_all_d(&masses(&[2, 5]), 0).unwrap() {
        assert!(rep.pass(), "{rep:?}");
    }
    let cfg = MassConfig::new(2, masses(&[1, 1]), 3).unwrap();
    let rep = check_conjecture3(&cfg, 0).unwrap();
    assert!(rep.singular_term_absent);
    assert_eq!(rep.v_eff, "0");
}

#[test]
fn three_body_gauge_singular_term() {
    for d in 2..=5 {
        let cfg = MassConfig::new(3, masses(&[1, 2, 3]), d).unwrap();
        let rep = check_conjecture3(&cfg, 0).unwrap();
        assert!(rep.pass(), "d = {d}: {rep:?}");
        assert_eq!(rep.singular_term_absent, d == 2 || d == 4, "d = {d}");
    }
}

#[test]
fn four_body_gauge_unit_masses() {
    for d in [3, 4, 5] {
        let cfg = MassConfig::equal(4, d).unwrap();
        let rep = check_conjecture3(&cfg, 1).unwrap();
        assert!(rep.pass(), "d = {d}");
        assert!(rep.point_checks >= 50);
        assert_eq!(rep.singular_term_absent, d != 4);
    }
}

#[test]
fn split_oracle_grid() {
    for n in 2..=5usize {
        for d in [n as i64 - 1, n as i64 + 1] {
            let m: Vec<Rational> = (1..=n as i64).map(|k| frac(k, 2) + int(1)).collect();
            let cfg = MassConfig::new(n, m, d).unwrap();
            let deg = if n == 5 { 2 } else { 3 };
            let rep = cartesian_split_oracle(&cfg, deg, 20, 5).unwrap();
            assert!(rep.pass(), "n = {n}, d = {d}");
        }
    }
}

#[test]
fn split_oracle_linear_two_body() {
    let cfg = MassConfig::new(2, masses(&[2, 3]), 3).unwrap();
    let rep = cartesian_split_oracle(&cfg, 0, 3, 0).unwrap();
    assert!(rep.trials.iter().all(|t| t.cartesian == "0" && t.radial == "0"));
}

#[test]
fn mutation_control_catches_every_mutant() {
    for n in 2..=5usize {
        let cfg = MassConfig::equal(n, n as i64).unwrap();
        let rep = mutation_control(&cfg, 2, 5, 9).unwrap();
        assert!(rep.pass(), "n = {n}: {:?}", rep.outcomes);
    }
}

#[test]
fn split_oracle_rejects_high_degree() {
    let cfg = MassConfig::equal(3, 2).unwrap();
    assert!(cartesian_split_oracle(&cfg, 4, 1, 0).is_err());
}

#[test]
fn measure_identity_symbolic() {
    for (n, m) in [(2, vec![2, 7]), (3, vec![1, 2, 3]), (4, vec![1, 3, 5, 7])] {
        let cfg = MassConfig::new(n, masses(&m), n as i64).unwrap();
        let rep = check_selfadjoint(&cfg, Mode::Symbolic, 0, 0, 100).unwrap();
        assert!(rep.pass(), "{:?}", rep.residuals);
        assert!(rep.symbolic_in_d);
    }
}

#[test]
fn measure_identity_points() {
    for n in 4..=6usize {
        for d in [n as i64 - 1, n as i64 + 2] {
            let cfg = MassConfig::equal(n, d).unwrap();
            assert!(check_selfadjoint(&cfg, Mode::Points, 10, 2, 100).unwrap().pass());
        }
    }
}

#[test]
fn positivity_three_and_four_bodies() {
    let cfg = MassConfig::new(3, masses(&[1, 5, 9]), 2).unwrap();
    assert!(check_positivity(&cfg, 50, 0).unwrap().pass());
    let cfg = MassConfig::equal(4, 3).unwrap();
    let rep = check_positivity(&cfg, 50, 0).unwrap();
    assert!(rep.pass());
    assert!(rep.samples.iter().all(|s| s.inequality == Some(true)));
}

#[test]
fn positivity_five_bodies() {
    let cfg = MassConfig::equal(5, 4).unwrap();
    let rep = check_positivity(&cfg, 50, 0).unwrap();
    assert!(rep.f2_checked);
    assert!(rep.pass());
}

#[test]
fn reports_serialize() {
    let cfg = MassConfig::equal(3, 3).unwrap();
    let rep = check_conjecture2(&cfg, Mode::Symbolic, 0, 0, 10).unwrap().report();
    let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(v["check"], "conjecture2");
    assert_eq!(v["pass"], true);
}

#[test]
fn three_body_rotation_commutes() {
    for m in [[1, 2, 3], [2, 3, 5], [7, 1, 4], [1, 1, 1], [9, 8, 2]] {
        let cfg = MassConfig::new(3, masses(&m), 3).unwrap();
        let rep = check_symmetries(&cfg).unwrap();
        assert!(rep.pass(), "{m:?}");
    }
}

#[test]
fn four_body_family_and_so3() {
    let rep = check_symmetries(&MassConfig::equal(4, 3).unwrap()).unwrap();
    assert!(rep.commutes && rep.annihilates_f1 && rep.annihilates_f2);
    let so3 = rep.so3.as_ref().unwrap();
    assert!(so3.killing_negative_definite);
    assert!(rep.pass());
}

#[test]
fn symmetries_unsupported_elsewhere() {
    assert!(check_symmetries(&MassConfig::equal(5, 4).unwrap()).is_err());
    assert!(check_symmetries(&MassConfig::new(4, masses(&[1, 1, 1, 2]), 3).unwrap()).is_err());
}

#[test]
fn generator_decomposition_round_trip() {
    for n in 2..=5usize {
        let m: Vec<Rational> = (1..=n as i64).map(int).collect();
        let cfg = MassConfig::new(n, m, n as i64).unwrap();
        let rep = check_sl_decomposition(&cfg, if n == 5 { 3 } else { 4 }).unwrap();
        assert!(rep.pass(), "n = {n}");
    }
}
