use nbody_core::algebra::{frac, int, to_f64, Monomial, MultiPoly, Rational};
use nbody_core::model::{build_delta_rad, MassConfig};
use nbody_core::operators::PolyDiffOp;
use nbody_core::spectral::*;

fn sweep_case(omega: &Rational) -> (Vec<Rational>, Rational) {
    // unit masses need a = √(ω/4); ω = 1/2 and 2 use masses 2 instead
    if *omega == int(1) {
        (vec![int(1), int(1)], frac(1, 2))
    } else {
        (vec![int(2), int(2)], gauge_for_omega(&MassConfig::new(2, vec![int(2), int(2)], 3).unwrap(), omega).unwrap())
    }
}

#[test]
fn three_dimensional_ladder() {
    let cfg = MassConfig::equal(2, 3).unwrap();
    let rep = harmonic_spectrum(&cfg, &[frac(1, 2)], 5).unwrap();
    let want: Vec<Rational> = [3, 7, 11, 15, 19, 23].iter().map(|&x| int(x)).collect();
    assert_eq!(rep.levels(), want);
    assert!(rep.triangular && rep.diagonal_nonnegative);
    assert_eq!(rep.basis_size, 6);
}

#[test]
fn two_body_matches_finite_differences() {
    for d in 1..=4i64 {
        for omega in [int(1), frac(1, 2), int(2)] {
            let (masses, a) = sweep_case(&omega);
            let cfg = MassConfig::new(2, masses.clone(), d).unwrap();
            let rep = harmonic_spectrum(&cfg, std::slice::from_ref(&a), 5).unwrap();
            let kappa: Rational = cfg.inverse_masses().iter().sum();
            assert_eq!(cfg.n, 2);
            // spacing 4κa
            let levels = rep.levels();
            assert!(levels.windows(2).all(|w| &w[1] - &w[0] == &kappa * &a * int(4)));
            let fm: Vec<f64> = masses.iter().map(to_f64).collect();
            let fd = fd_oracle_n2(&fm, d as u32, to_f64(&omega), levels.len(), &FdOptions::default()).unwrap();
            for (exact, approx) in levels.iter().zip(&fd.eigenvalues) {
                let e = to_f64(exact);
                assert!(((approx - e) / e).abs() <= 1e-6, "d={d} omega={omega}: {approx} vs {e}");
            }
        }
    }
}

#[test]
fn basis_dimension() {
    for (m, n, size) in [(1, 5, 6), (3, 2, 10), (3, 4, 35), (6, 3, 84), (10, 2, 66)] {
        assert_eq!(MonomialBasis::new(m, n).len(), size);
    }
}

#[test]
fn three_bodies_linear_in_exponents() {
    let cfg = MassConfig::equal(3, 2).unwrap();
    for a in [frac(1, 3), int(1), frac(5, 2)] {
        let (spec, h) = harmonic_model(&cfg, &[a.clone(), a.clone(), a.clone()]).unwrap();
        let basis = MonomialBasis::new(3, 3);
        let mat = operator_matrix(&h, &basis).unwrap();
        assert!(mat.is_upper_triangular());
        let diag = mat.diagonal();
        // coefficient per unit exponent, read off the degree-one monomials
        let unit: Vec<Rational> = (0..3).map(|k| diag[basis.index_of(&Monomial::var(3, k, 1)).unwrap()].clone()).collect();
        for (k, mono) in basis.monomials().iter().enumerate() {
            let predicted: Rational = mono.exponents().iter().zip(&unit).map(|(&p, c)| c * int(p as i64)).sum();
            assert_eq!(diag[k], predicted);
        }
        // E₀ = Σ d κ a over three pairs
        assert_eq!(spec.e0, &a * int(2 * 2 * 3));
    }
}

#[test]
fn eigenfunctions_reconstruct() {
    let cases = [
        (MassConfig::equal(2, 3).unwrap(), vec![frac(1, 2)], 4),
        (MassConfig::equal(3, 3).unwrap(), vec![frac(1, 3); 3], 3),
        (MassConfig::equal(4, 3).unwrap(), vec![int(1); 6], 2),
    ];
    let mut checked = 0;
    for (cfg, a, n) in cases {
        let (spec, h) = harmonic_model(&cfg, &a).unwrap();
        let r = build_delta_rad(&cfg).unwrap();
        let basis = MonomialBasis::new(a.len(), n);
        let mat = operator_matrix(&h, &basis).unwrap();
        // physical operator −Δ_rad + V, conjugated by the gauge
        let physical = r.op.scale(&int(-1)) + PolyDiffOp::multiplication(spec.potential.clone());
        let conj = physical.conjugate_exp_linear(&a);
        for k in [0, basis.len() / 2, basis.len() - 1] {
            let v = mat.triangular_eigenvector(k).expect("diagonalizable block");
            let p = MultiPoly::from_terms(&r.vars, basis.monomials().iter().cloned().zip(v));
            let energy = mat.get(k, k) + &spec.e0;
            assert_eq!(conj.apply(&p), p.scale(&energy));
            checked += 1;
        }
    }
    assert!(checked >= 5);
}

#[test]
fn reordering_within_degree_blocks() {
    let cfg = MassConfig::equal(3, 4).unwrap();
    let (_, h) = harmonic_model(&cfg, &[int(1), int(1), int(1)]).unwrap();
    let basis = MonomialBasis::new(3, 3);
    let mut shuffled: Vec<Monomial> = Vec::new();
    for deg in 0..=3 {
        let mut block: Vec<Monomial> = basis.monomials().iter().filter(|m| m.degree() == deg).cloned().collect();
        block.reverse();
        shuffled.extend(block);
    }
    let other = MonomialBasis::from_monomials(3, 3, shuffled).unwrap();
    let mut d1 = operator_matrix(&h, &basis).unwrap().diagonal();
    let mut d2 = operator_matrix(&h, &other).unwrap().diagonal();
    d1.sort();
    d2.sort();
    assert_eq!(d1, d2);
}

#[test]
fn radial_operator_lowers_degree() {
    for n in 2..=5usize {
        let r = build_delta_rad(&MassConfig::equal(n, n as i64).unwrap()).unwrap();
        let nmax = if n == 5 { 3 } else { 5 };
        let basis = MonomialBasis::new(r.vars.len(), nmax);
        let mat = operator_matrix(&r.op, &basis).unwrap();
        assert!(mat.lowers_degree(&basis));
        assert!(mat.is_strictly_upper_triangular());
        assert!(mat.power_vanishes(nmax + 1));
    }
}

#[test]
fn fd_rejects_bad_input() {
    assert!(fd_oracle_n2(&[1.0, 1.0], 3, -1.0, 2, &FdOptions::default()).is_err());
    assert!(fd_oracle_n2(&[1.0], 3, 1.0, 2, &FdOptions::default()).is_err());
}

#[test]
fn spectrum_json_shape() {
    let cfg = MassConfig::equal(2, 3).unwrap();
    let rep = harmonic_spectrum(&cfg, &[frac(1, 2)], 2).unwrap();
    let v = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["E0"], "3");
    assert_eq!(v["eigenvalues"], serde_json::json!(["3", "7", "11"]));
    assert_eq!(v["N"], 2);
}
