use std::sync::Arc;

use nbody_core::algebra::{frac, int, poly_det, random_assignment, Monomial, MultiPoly, PolyMatrix, Rational, RationalFn, VarSet};
use nbody_core::model::{cayley_menger_sq, MassConfig, weighted_volume_sums};
use proptest::prelude::*;

fn xyz() -> Arc<VarSet> {
    Arc::new(VarSet::new(["x", "y", "z"]).unwrap())
}

fn poly_from(vars: &Arc<VarSet>, terms: &[([u16; 3], i64, i64)]) -> MultiPoly {
    MultiPoly::from_terms(vars, terms.iter().map(|(e, p, q)| (Monomial::from_exponents(e), frac(*p, *q))))
}

fn arb_terms() -> impl Strategy<Value = Vec<([u16; 3], i64, i64)>> {
    prop::collection::vec(([0u16..3, 0u16..3, 0u16..3], -9i64..=9, 1i64..=5), 0..6)
}

fn arb_point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-20i64..=20, 1i64..=7).prop_map(|(p, q)| frac(p, q)), 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_terms(), b in arb_terms(), c in arb_terms()) {
        let v = xyz();
        let (a, b, c) = (poly_from(&v, &a), poly_from(&v, &b), poly_from(&v, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(&v), a.clone());
    }

    #[test]
    fn exact_division_inverts_product(a in arb_terms(), b in arb_terms()) {
        let v = xyz();
        let (a, b) = (poly_from(&v, &a), poly_from(&v, &b));
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_terms(), b in arb_terms(), p in arb_point()) {
        let v = xyz();
        let (a, b) = (poly_from(&v, &a), poly_from(&v, &b));
        prop_assert_eq!((&a * &b).eval(&p), a.eval(&p) * b.eval(&p));
        prop_assert_eq!((&a + &b).eval(&p), a.eval(&p) + b.eval(&p));
        prop_assert_eq!(a.pow(3).eval(&p), {
            let x = a.eval(&p);
            &x * &x * &x
        });
    }

    #[test]
    fn determinant_is_alternating_and_multilinear(
        rows in prop::collection::vec(prop::collection::vec(arb_terms(), 3), 3),
        k in 0usize..3,
        s in (-9i64..=9, 1i64..=5),
    ) {
        let v = xyz();
        let entries: Vec<Vec<MultiPoly>> = rows.iter().map(|r| r.iter().map(|t| poly_from(&v, t)).collect()).collect();
        let mut dup = entries.clone();
        dup[(k + 1) % 3] = dup[k].clone();
        prop_assert!(poly_det(&PolyMatrix::from_rows(&v, dup)).is_zero());

        let m = PolyMatrix::from_rows(&v, entries);
        let mut scaled = m.clone();
        let c = frac(s.0, s.1);
        scaled.scale_row(k, &c);
        prop_assert_eq!(poly_det(&scaled), poly_det(&m).scale(&c));
    }

    #[test]
    fn determinant_commutes_with_evaluation(
        rows in prop::collection::vec(prop::collection::vec(arb_terms(), 3), 3),
        p in arb_point(),
    ) {
        let v = xyz();
        let entries: Vec<Vec<MultiPoly>> = rows.iter().map(|r| r.iter().map(|t| poly_from(&v, t)).collect()).collect();
        let m = PolyMatrix::from_rows(&v, entries);
        prop_assert_eq!(poly_det(&m).eval(&p), m.eval(&p).det());
    }

    #[test]
    fn seeded_points_are_deterministic(seed in any::<u64>()) {
        let v = VarSet::relative(4);
        prop_assert_eq!(random_assignment(&v, seed, 1000), random_assignment(&v, seed, 1000));
    }
}

#[test]
fn symbolic_determinants() {
    let v = Arc::new(VarSet::new(["x", "y"]).unwrap());
    let (x, y) = (MultiPoly::var(&v, 0), MultiPoly::var(&v, 1));
    let m = PolyMatrix::from_rows(&v, vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]]);
    assert_eq!(poly_det(&m), &(&x * &x) - &(&y * &y));

    let r = Arc::new(VarSet::new(["rho"]).unwrap());
    let rho = MultiPoly::var(&r, 0);
    let two = rho.scale(&int(2));
    let m = PolyMatrix::from_rows(&r, vec![vec![two.clone(), rho.clone()], vec![rho.clone(), two]]);
    assert_eq!(poly_det(&m), rho.pow(2).scale(&int(3)));
}

#[test]
fn exact_division_examples() {
    let v = Arc::new(VarSet::new(["x", "y"]).unwrap());
    let (x, y) = (MultiPoly::var(&v, 0), MultiPoly::var(&v, 1));
    assert_eq!((&(&x * &x) - &(&y * &y)).div_exact(&(&x - &y)).unwrap(), &x + &y);
    assert!((&(&x * &x) + &MultiPoly::one(&v)).div_exact(&x).is_err());

    let f = RationalFn::new(&(&x * &x) - &(&y * &y), &x - &y).unwrap();
    assert_eq!(f.as_poly(), Some(&x + &y));
}

#[test]
fn triangle_volume_identities() {
    let cfg = MassConfig::equal(3, 2).unwrap();
    let vols = weighted_volume_sums(&cfg).unwrap();
    let vars = vols.vars.clone();
    let v3 = cayley_menger_sq(&[1, 2, 3], &vars);
    assert_eq!(v3.eval(&[int(1), int(1), int(1)]), frac(3, 16));

    // Gram determinant of the radial metric over 96 V₃² is Σρ.
    let r = nbody_core::model::build_delta_rad(&cfg).unwrap();
    let quotient = poly_det(&r.g).div_exact(&v3.scale(&int(96))).unwrap();
    let sum = (0..3).fold(MultiPoly::zero(&vars), |acc, k| &acc + &MultiPoly::var(&vars, k));
    assert_eq!(quotient, sum);
}
