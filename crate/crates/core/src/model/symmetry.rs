use std::sync::Arc;

use num_traits::{Signed, Zero};

use super::ModelError;
use crate::algebra::{frac, int, Monomial, MultiPoly, Rational, VarSet};
use crate::operators::PolyDiffOp;

fn first_order(vars: &Arc<VarSet>, coeffs: Vec<MultiPoly>) -> PolyDiffOp {
    let mut op = PolyDiffOp::zero(vars);
    for (k, c) in coeffs.into_iter().enumerate() {
        op.add_term(Monomial::var(vars.len(), k, 1), c);
    }
    op
}

/// The rational part `L` of the three-body rotation generator (the overall
/// factor `[m₁m₂m₃(m₁+m₂+m₃)]^{−1/2}` is left out).
pub fn symmetry_k12(masses: &[Rational]) -> PolyDiffOp {
    assert_eq!(masses.len(), 3, "three masses");
    let vars = Arc::new(VarSet::relative(3));
    let (m1, m2, m3) = (&masses[0], &masses[1], &masses[2]);
    let r = |k| MultiPoly::var(&vars, k);
    let lin = |a: Rational, b: Rational, c: Rational| &(&r(0).scale(&a) + &r(1).scale(&b)) + &r(2).scale(&c);
    let c12 = lin(m1 - m2, m1 + m2, -(m1 + m2)).scale(&-m3);
    let c13 = lin(m1 + m3, m1 - m3, -(m1 + m3)).scale(m2);
    let c23 = lin(m2 + m3, -(m2 + m3), m2 - m3).scale(&-m1);
    first_order(&vars, vec![c12, c13, c23])
}

/// Four-body, unit-mass symmetry family `L(a, b, c)` with coefficients in
/// the ring of `vars` (which must contain the six pair variables).
fn l4_over(vars: &Arc<VarSet>, a: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> PolyDiffOp {
    let r = |i, j| MultiPoly::var(vars, vars.index_of(&crate::algebra::rho_name(i, j)).expect("pair variable"));
    let (r12, r13, r14, r23, r24, r34) = (r(1, 2), r(1, 3), r(1, 4), r(2, 3), r(2, 4), r(3, 4));
    let lc = |x: i64, y: i64, z: i64, den: i64| {
        let q = |v| frac(v, den);
        &(&a.scale(&q(x)) + &b.scale(&q(y))) + &c.scale(&q(z))
    };
    let mut coeffs = vec![MultiPoly::zero(vars); 6];
    let k = |i, j| vars.index_of(&crate::algebra::rho_name(i, j)).expect("pair variable");
    coeffs[k(1, 2)] = &(&r13 * a) + &(&(&r14 * b) - &(&(&r23 * a) + &(&r24 * b)));
    let p = lc(3, 3, 2, 2);
    let q = lc(3, 7, 6, 2);
    coeffs[k(1, 3)] = &(&(&r14 * &q) - &(&r12 * &p)) + &(&(&r23 * &p) - &(&r34 * &q));
    let p = lc(1, -1, -2, 2);
    let q = lc(3, 5, 6, 2);
    coeffs[k(2, 3)] = &(&(&r12 * &p) - &(&r13 * &p)) + &(&(&r24 * &q) - &(&r34 * &q));
    let p = lc(1, 3, 3, 1);
    coeffs[k(1, 4)] = &(&(&r12 * c) - &(&r13 * &p)) + &(&(&r34 * &p) - &(&r24 * c));
    let p = lc(1, 2, 1, 1);
    let q = lc(2, 3, 3, 1);
    coeffs[k(2, 4)] = &(&(&r12 * &p) - &(&r14 * &p)) + &(&(&r34 * &q) - &(&r23 * &q));
    let p = lc(1, 5, 4, 2);
    let q = lc(3, 3, 4, 2);
    coeffs[k(3, 4)] = &(&(&r13 * &p) - &(&r14 * &p)) + &(&(&r23 * &q) - &(&r24 * &q));
    let mut op = PolyDiffOp::zero(vars);
    for (idx, c) in coeffs.into_iter().enumerate() {
        op.add_term(Monomial::var(vars.len(), idx, 1), c);
    }
    op
}

pub fn symmetry_l4(a: &Rational, b: &Rational, c: &Rational) -> PolyDiffOp {
    let vars = Arc::new(VarSet::relative(4));
    let k = |v: &Rational| MultiPoly::constant(&vars, v.clone());
    l4_over(&vars, &k(a), &k(b), &k(c))
}

/// `L(a, b, c)` with `a, b, c` as three extra polynomial variables named
/// `a`, `b`, `c` after the pair variables.
pub fn symmetry_l4_symbolic() -> PolyDiffOp {
    let vars = Arc::new(VarSet::relative(4).with_extra(&["a", "b", "c"]).expect("fresh names"));
    let v = |name| MultiPoly::var_named(&vars, name).expect("declared");
    l4_over(&vars, &v("a"), &v("b"), &v("c"))
}

/// `(a, b, c)` with `op = L(a, b, c)`, or `None` when `op` is outside the
/// family.
pub fn l4_coordinates(op: &PolyDiffOp) -> Option<[Rational; 3]> {
    let vars = op.vars();
    let d12 = op.coeff1(0);
    let one = |k| Monomial::var(vars.len(), k, 1);
    // ∂_{ρ12} carries a(ρ13 − ρ23) + b(ρ14 − ρ24); ∂_{ρ14} carries c ρ12 + …
    let a = d12.coeff(&one(1));
    let b = d12.coeff(&one(2));
    let c = op.coeff1(2).coeff(&one(0));
    (symmetry_l4(&a, &b, &c) == *op).then_some([a, b, c])
}

fn basis_vector(i: usize) -> [Rational; 3] {
    let mut v = [int(0), int(0), int(0)];
    v[i] = int(1);
    v
}

fn l4_of(v: &[Rational; 3]) -> PolyDiffOp {
    symmetry_l4(&v[0], &v[1], &v[2])
}

/// Coordinates of `[L(u), L(v)]` in the family.
pub fn bracket_coordinates(u: &[Rational; 3], v: &[Rational; 3]) -> Result<[Rational; 3], ModelError> {
    let br = l4_of(u).commutator(&l4_of(v))?;
    l4_coordinates(&br).ok_or_else(|| ModelError::DecompositionFailed("bracket leaves the L family".into()))
}

/// Killing form `tr(ad_i ad_j)` in the basis `L(1,0,0), L(0,1,0), L(0,0,1)`.
pub fn killing_form() -> Result<[[Rational; 3]; 3], ModelError> {
    let mut ad: Vec<[[Rational; 3]; 3]> = Vec::new();
    for i in 0..3 {
        let mut m: [[Rational; 3]; 3] = Default::default();
        for j in 0..3 {
            let col = bracket_coordinates(&basis_vector(i), &basis_vector(j))?;
            for k in 0..3 {
                m[k][j] = col[k].clone();
            }
        }
        ad.push(m);
    }
    let mut kf: [[Rational; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let mut tr = Rational::zero();
            for a in 0..3 {
                for b in 0..3 {
                    tr += &ad[i][a][b] * &ad[j][b][a];
                }
            }
            kf[i][j] = tr;
        }
    }
    Ok(kf)
}

/// Rational basis of the L family, orthogonal for the Killing form, with
/// `[E₁,E₂] = λ₃E₃`, `[E₂,E₃] = λ₁E₁`, `[E₃,E₁] = λ₂E₂`.
///
/// `J_i = s_i E_i` then satisfies `[J₁,J₂] = J₃` and cyclic when
/// `s₁² = 1/(λ₂λ₃)`, `s₂² = 1/(λ₁λ₃)`, `s₃² = 1/(λ₁λ₂)`.
#[derive(Clone, Debug)]
pub struct So3Basis {
    pub vectors: [[Rational; 3]; 3],
    pub operators: [PolyDiffOp; 3],
    pub lambdas: [Rational; 3],
    pub scale_squares: [Rational; 3],
    pub killing: [[Rational; 3]; 3],
    /// Killing form negative definite.
    pub compact: bool,
}

pub fn so3_basis() -> Result<So3Basis, ModelError> {
    let kf = killing_form()?;
    let form = |u: &[Rational; 3], v: &[Rational; 3]| {
        let mut acc = Rational::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc += &u[i] * &kf[i][j] * &v[j];
            }
        }
        acc
    };
    let mut vectors: Vec<[Rational; 3]> = Vec::new();
    for i in 0..3 {
        let mut v = basis_vector(i);
        for e in &vectors {
            let f = form(&v, e) / form(e, e);
            for k in 0..3 {
                v[k] = &v[k] - &f * &e[k];
            }
        }
        if form(&v, &v).is_zero() {
            return Err(ModelError::DecompositionFailed("Killing form is degenerate".into()));
        }
        vectors.push(v);
    }
    let vectors: [[Rational; 3]; 3] = [vectors[0].clone(), vectors[1].clone(), vectors[2].clone()];
    let ratio = |x: &[Rational; 3], target: &[Rational; 3]| -> Result<Rational, ModelError> {
        let k = (0..3).find(|&k| !target[k].is_zero()).expect("nonzero basis vector");
        let lam = &x[k] / &target[k];
        if (0..3).all(|j| x[j] == &lam * &target[j]) {
            Ok(lam)
        } else {
            Err(ModelError::DecompositionFailed("bracket not proportional to the third element".into()))
        }
    };
    let l3 = ratio(&bracket_coordinates(&vectors[0], &vectors[1])?, &vectors[2])?;
    let l1 = ratio(&bracket_coordinates(&vectors[1], &vectors[2])?, &vectors[0])?;
    let l2 = ratio(&bracket_coordinates(&vectors[2], &vectors[0])?, &vectors[1])?;
    let compact = (0..3).all(|i| form(&vectors[i], &vectors[i]).is_negative());
    let scale_squares = [(&l2 * &l3).recip(), (&l1 * &l3).recip(), (&l1 * &l2).recip()];
    Ok(So3Basis {
        operators: [l4_of(&vectors[0]), l4_of(&vectors[1]), l4_of(&vectors[2])],
        vectors,
        lambdas: [l1, l2, l3],
        scale_squares,
        killing: kf,
        compact,
    })
}
