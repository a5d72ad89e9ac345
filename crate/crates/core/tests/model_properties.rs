use std::sync::Arc;

use nbody_core::algebra::{frac, int, pairs, poly_det, rho_name, Monomial, MultiPoly, Rational, VarSet};
use nbody_core::model::{
    build_delta_rad, cayley_menger_sq, expand_decomposition, frozen_mass_limit, gauge_spec, jacobi_map, limit_convergence,
    mass_constant, reference_f2, reference_veff, sl_decomposition, symmetry_k12, symmetry_l4, weighted_volume_sums, MassConfig,
    Word,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn masses(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&m| int(m)).collect()
}

fn var(vars: &Arc<VarSet>, i: usize, j: usize) -> MultiPoly {
    MultiPoly::var_named(vars, &rho_name(i, j)).unwrap()
}

fn arb_masses(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((1i64..=9, 1i64..=4).prop_map(|(p, q)| frac(p, q)), n)
}

fn pair_permutation(n: usize, sigma: &[usize]) -> Vec<usize> {
    let vars = VarSet::relative(n);
    pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let (a, b) = (sigma[i - 1] + 1, sigma[j - 1] + 1);
            vars.pair_index(a.min(b), a.max(b)).unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabeling_equivariance(
        (n, m, sigma) in (3usize..=4).prop_flat_map(|n| (Just(n), arb_masses(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle())),
        d in 3i64..=5,
    ) {
        let r = build_delta_rad(&MassConfig::new(n, m.clone(), d).unwrap()).unwrap();
        let mut relabeled = vec![int(0); n];
        for i in 0..n {
            relabeled[sigma[i]] = m[i].clone();
        }
        let r2 = build_delta_rad(&MassConfig::new(n, relabeled, d).unwrap()).unwrap();
        prop_assert_eq!(r.op.permute(&pair_permutation(n, &sigma)), r2.op);
    }

    #[test]
    fn metric_entries_are_linear_forms(m in arb_masses(4), d in 3i64..=6) {
        let r = build_delta_rad(&MassConfig::new(4, m, d).unwrap()).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let g = r.g.get(i, j);
                prop_assert!(g.is_zero() || (g.is_homogeneous() && g.total_degree() == Some(1)));
            }
        }
    }

    #[test]
    fn jacobi_coordinates_diagonalize(m in arb_masses(4), seed in any::<u64>()) {
        let cfg = MassConfig::new(4, m, 3).unwrap();
        let j = jacobi_map(&cfg);
        prop_assert!(j.is_diagonalizing());
        let (lhs, rhs) = j.kinetic_sides(3, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn two_body_operator() {
    let cfg = MassConfig::new(2, masses(&[2, 5]), 3).unwrap();
    let r = build_delta_rad(&cfg).unwrap();
    let kappa = frac(7, 10);
    let rho = MultiPoly::var(&r.vars, 0);
    assert_eq!(r.op.coeff2(0, 0), rho.scale(&(int(2) * &kappa)));
    assert_eq!(r.op.coeff1(0), MultiPoly::constant(&r.vars, int(3) * &kappa));
    assert_eq!(r.op.num_terms(), 2);
}

#[test]
fn three_and_four_body_coefficients() {
    let cfg = MassConfig::new(3, masses(&[2, 3, 5]), 3).unwrap();
    let r = build_delta_rad(&cfg).unwrap();
    let v = &r.vars;
    assert_eq!(r.op.coeff2(1, 1), var(v, 1, 3).scale(&(int(2) * frac(7, 10))));
    // Pairs (1,2) and (1,3) share particle 1.
    let cross = &(&var(v, 1, 2) + &var(v, 1, 3)) - &var(v, 2, 3);
    assert_eq!(r.op.coeff2(0, 1), cross.scale(&frac(2, 2)));
    assert_eq!(r.g.get(0, 1), &cross.scale(&frac(1, 2)));

    let r = build_delta_rad(&MassConfig::equal(4, 3).unwrap()).unwrap();
    let k12 = r.vars.pair_index(1, 2).unwrap();
    let k34 = r.vars.pair_index(3, 4).unwrap();
    assert!(r.op.coeff2(k12, k34).is_zero());
}

#[test]
fn homogeneity_of_determinant_and_volumes() {
    for n in 2..=4 {
        let cfg = MassConfig::new(n, masses(&[1, 2, 3, 4][..n]), n as i64).unwrap();
        let r = build_delta_rad(&cfg).unwrap();
        let det = poly_det(&r.g);
        assert!(det.is_homogeneous());
        assert_eq!(det.total_degree(), Some((n * (n - 1) / 2) as u32));
        let vols = weighted_volume_sums(&cfg).unwrap();
        for k in 2..=n {
            for (_, v2) in &vols.faces[k] {
                assert!(v2.is_homogeneous());
                assert_eq!(v2.total_degree(), Some(k as u32 - 1));
            }
        }
        assert_eq!(vols.f1, vols.faces[n][0].1);
    }
}

#[test]
fn simplex_volumes() {
    let vars = Arc::new(VarSet::relative(4));
    assert_eq!(cayley_menger_sq(&[1, 2], &vars), var(&vars, 1, 2));
    let r = |i, j| var(&vars, i, j);
    let t = |a: (usize, usize), b: (usize, usize), c: (usize, usize)| &(&r(a.0, a.1) * &r(b.0, b.1)) * &r(c.0, c.1);
    let plus = [
        t((1, 4), (2, 3), (1, 2)),
        t((1, 3), (2, 4), (1, 2)),
        t((1, 3), (3, 4), (1, 2)),
        t((1, 4), (3, 4), (1, 2)),
        t((2, 3), (3, 4), (1, 2)),
        t((2, 4), (3, 4), (1, 2)),
        t((1, 3), (1, 4), (2, 3)),
        t((1, 3), (1, 4), (2, 4)),
        t((1, 3), (2, 3), (2, 4)),
        t((1, 4), (2, 3), (2, 4)),
        t((1, 4), (2, 3), (3, 4)),
        t((1, 3), (2, 4), (3, 4)),
    ];
    let minus = [
        t((1, 4), (2, 4), (1, 2)),
        t((1, 2), (1, 3), (2, 3)),
        t((1, 3), (1, 4), (3, 4)),
        t((2, 3), (2, 4), (3, 4)),
        t((1, 2), (1, 2), (3, 4)),
        t((1, 3), (1, 3), (2, 4)),
        t((1, 4), (1, 4), (2, 3)),
        t((1, 2), (3, 4), (3, 4)),
        t((1, 3), (2, 4), (2, 4)),
        t((1, 4), (2, 3), (2, 3)),
    ];
    let mut expected = MultiPoly::zero(&vars);
    for p in &plus {
        expected += p;
    }
    for p in &minus {
        expected -= p;
    }
    assert_eq!(cayley_menger_sq(&[1, 2, 3, 4], &vars), expected.scale(&frac(1, 144)));
}

#[test]
fn volume_sums() {
    let vols = weighted_volume_sums(&MassConfig::equal(6, 5).unwrap()).unwrap();
    let counts: Vec<usize> = (2..=5).map(|k| vols.faces[k].len()).collect();
    assert_eq!(counts, vec![15, 20, 15, 6]);
    assert!(vols.tilde(1).is_constant() && vols.tilde(1).constant_term() == int(1));

    let vols = weighted_volume_sums(&MassConfig::equal(4, 3).unwrap()).unwrap();
    let sum = (0..6).fold(MultiPoly::zero(&vols.vars), |acc, k| &acc + &MultiPoly::var(&vols.vars, k));
    assert_eq!(vols.tilde(2), &sum);

    // Weighted: edges by m_i m_j, triangles by the inverse mass of the
    // opposite vertex.
    let cfg = MassConfig::new(4, masses(&[1, 2, 3, 4]), 3).unwrap();
    let vols = weighted_volume_sums(&cfg).unwrap();
    let v = vols.vars.clone();
    assert_eq!(vols.tilde(2).coeff(&Monomial::var(6, v.pair_index(3, 4).unwrap(), 1)), int(12));
    let expected = [(vec![2, 3, 4], int(1)), (vec![1, 3, 4], frac(1, 2)), (vec![1, 2, 4], frac(1, 3)), (vec![1, 2, 3], frac(1, 4))]
        .iter()
        .fold(MultiPoly::zero(&v), |acc, (face, w)| &acc + &cayley_menger_sq(face, &v).scale(w));
    assert_eq!(vols.tilde(3), &expected);
}

#[test]
fn mass_constants() {
    let c = |n| mass_constant(&MassConfig::equal(n, n as i64).unwrap());
    assert_eq!(c(3), int(96));
    assert_eq!(c(4), int(36864));
    assert_eq!(c(5), int(424673280));
    let cfg = MassConfig::new(4, masses(&[1, 2, 3, 4]), 3).unwrap();
    assert_eq!(mass_constant(&cfg), int(9216) * int(10) / int(576));
}

#[test]
fn second_factor_closed_forms() {
    let cfg = MassConfig::new(2, masses(&[3, 7]), 2).unwrap();
    let vols = weighted_volume_sums(&cfg).unwrap();
    assert_eq!(reference_f2(&cfg, &vols).unwrap(), MultiPoly::constant(&vols.vars, int(21)));

    let cfg = MassConfig::equal(4, 3).unwrap();
    let vols = weighted_volume_sums(&cfg).unwrap();
    let expected = &(vols.tilde(3) * vols.tilde(2)) - &vols.f1.scale(&int(36));
    assert_eq!(reference_f2(&cfg, &vols).unwrap(), expected);

    for n in 2..=5 {
        let cfg = MassConfig::equal(n, n as i64).unwrap();
        let vols = weighted_volume_sums(&cfg).unwrap();
        let f2 = reference_f2(&cfg, &vols).unwrap();
        assert!(f2.is_homogeneous());
        assert_eq!(f2.total_degree(), Some(((n - 1) * (n - 2) / 2) as u32));
    }
}

#[test]
fn effective_potentials() {
    let cfg = MassConfig::new(2, masses(&[2, 3]), 5).unwrap();
    let vols = weighted_volume_sums(&cfg).unwrap();
    let v = reference_veff(&cfg, &vols).unwrap();
    // (d−1)(d−3)(m₁+m₂)/(8 m₁ m₂ ρ) at d = 5, ρ = 2
    assert_eq!(v.eval(&[int(2)]).unwrap(), frac(4 * 2 * 5, 8 * 6 * 2));

    for d in [2, 4] {
        let cfg = MassConfig::new(3, masses(&[1, 2, 3]), d).unwrap();
        let vols = weighted_volume_sums(&cfg).unwrap();
        let v = reference_veff(&cfg, &vols).unwrap();
        let f2 = reference_f2(&cfg, &vols).unwrap();
        assert_eq!(v.denom().total_degree(), f2.total_degree());
    }
    let cfg = MassConfig::new(3, masses(&[1, 2, 3]), 3).unwrap();
    let vols = weighted_volume_sums(&cfg).unwrap();
    assert!(reference_veff(&cfg, &vols).unwrap().denom().total_degree() > Some(1));

    let cfg = MassConfig::equal(4, 3).unwrap();
    let vols = weighted_volume_sums(&cfg).unwrap();
    let v = reference_veff(&cfg, &vols).unwrap();
    let f2 = reference_f2(&cfg, &vols).unwrap();
    let point: Vec<Rational> = (1..=6).map(|k| int(k + 3)).collect();
    let first = (vols.tilde(2).pow(2).scale(&int(3)) + vols.tilde(3).scale(&int(112))).eval(&point) / (int(32) * f2.eval(&point));
    assert_eq!(v.eval(&point).unwrap(), first);
}

#[test]
fn gauge_exponents() {
    for d in 2..=6 {
        let cfg = MassConfig::new(3, masses(&[1, 2, 3]), d).unwrap();
        let vols = weighted_volume_sums(&cfg).unwrap();
        assert_eq!(gauge_spec(&cfg, &vols).unwrap().exponents(), vec![frac(2 - d, 4), frac(-1, 4)]);
    }
    for d in 3..=6 {
        let cfg = MassConfig::equal(4, d).unwrap();
        let vols = weighted_volume_sums(&cfg).unwrap();
        assert_eq!(gauge_spec(&cfg, &vols).unwrap().exponents(), vec![frac(3 - d, 4), frac(-1, 4)]);
    }
}

#[test]
fn rotation_generators() {
    let m = masses(&[1, 4, 7]);
    let l = symmetry_k12(&m);
    let v = l.vars().clone();
    let expected = (&(&var(&v, 1, 2).scale(&int(-3)) + &var(&v, 1, 3).scale(&int(5))) - &var(&v, 2, 3).scale(&int(5))).scale(&int(-7));
    assert_eq!(l.coeff1(0), expected);

    let l = symmetry_k12(&masses(&[1, 1, 1]));
    let sum = (0..3).fold(MultiPoly::zero(&v), |acc, k| &acc + &MultiPoly::var(&v, k));
    assert!(l.apply(&sum).is_zero());

    assert!(symmetry_l4(&int(0), &int(0), &int(0)).is_zero());
}

#[test]
fn generator_words() {
    let cfg = MassConfig::new(3, masses(&[1, 2, 3]), 4).unwrap();
    let r = build_delta_rad(&cfg).unwrap();
    let dec = sl_decomposition(&r).unwrap();
    assert_eq!(dec.m, 3);
    assert_eq!(expand_decomposition(&r.vars, &dec).unwrap(), r.op);
    let word = |w: Word| dec.words.iter().find(|(x, _)| *x == w).map(|(_, c)| c.clone());
    for (k, (i, j)) in pairs(3).into_iter().enumerate() {
        let kappa = cfg.masses[i - 1].recip() + cfg.masses[j - 1].recip();
        assert_eq!(word(Word::Lower(k)), Some(int(4) * &kappa));
        assert_eq!(word(Word::ZeroLower(k, k, k)), Some(int(2) * &kappa));
    }
}

#[test]
fn frozen_mass_limits() {
    let cfg = MassConfig::new(3, masses(&[2, 3, 5]), 3).unwrap();
    let r = build_delta_rad(&cfg).unwrap();
    let lim = frozen_mass_limit(&r, &[1]);
    assert!(lim.op.coeff2(0, 1).is_zero());
    assert!(!lim.op.coeff2(0, 2).is_zero());
    assert_eq!(lim.op.coeff2(0, 0), var(&r.vars, 1, 2).scale(&frac(2, 3)));

    let lim = frozen_mass_limit(&r, &[1, 2]);
    assert!(lim.op.terms().all(|(alpha, _)| alpha.exponents()[0] == 0));

    let steps = limit_convergence(&r, &[1], &[3, 6, 9]);
    assert!(steps.iter().all(|s| s.max_deviation > int(0)));
    assert!(steps.windows(2).all(|w| w[1].max_deviation < w[0].max_deviation));
    assert!(steps[2].max_deviation < frac(1, 100_000_000));
}

#[test]
fn jacobi_rows() {
    let cfg = MassConfig::new(3, masses(&[2, 3, 5]), 3).unwrap();
    let j = jacobi_map(&cfg);
    assert_eq!(j.rows[0].scale_sq, frac(6, 5));
    assert_eq!(j.rows[0].coeffs, vec![int(-1), int(1), int(0)]);
    // m₃(m₁+m₂)/M
    assert_eq!(j.rows[1].scale_sq, frac(25, 10));

    let j = jacobi_map(&MassConfig::equal(3, 2).unwrap());
    assert_eq!(j.rows[1].scale_sq, frac(2, 3));
    assert_eq!(j.rows[1].coeffs, vec![frac(-1, 2), frac(-1, 2), int(1)]);
}
