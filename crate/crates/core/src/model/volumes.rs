use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{subsets, MassConfig, ModelError};
use crate::algebra::rational::factorial;
use crate::algebra::{poly_det, MultiPoly, PolyMatrix, RatMatrix, Rational, VarSet};

/// `(-1)^k / (2^{k-1} ((k-1)!)^2)`, the factor turning the bordered
/// Cayley-Menger determinant of `k` points into the squared volume.
fn cm_normalization(k: usize) -> Rational {
    let f = factorial(k as u32 - 1);
    let den = BigInt::from(2).pow(k as u32 - 1) * &f * &f;
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    Rational::new(BigInt::from(sign), den)
}

/// Bordered Cayley-Menger matrix of the given vertices (1-based labels).
pub fn cayley_menger_matrix(vertices: &[usize], vars: &Arc<VarSet>) -> PolyMatrix {
    let k = vertices.len();
    let mut m = PolyMatrix::zeros(vars, k + 1);
    for a in 1..=k {
        m.set(0, a, MultiPoly::one(vars));
        m.set(a, 0, MultiPoly::one(vars));
        for b in a + 1..=k {
            let (i, j) = (vertices[a - 1].min(vertices[b - 1]), vertices[a - 1].max(vertices[b - 1]));
            let rho = MultiPoly::var(vars, vars.pair_index(i, j).expect("vertex pair in variable set"));
            m.set(a, b, rho.clone());
            m.set(b, a, rho);
        }
    }
    m
}

/// Squared volume of the simplex on `vertices` (1-based particle labels),
/// as a polynomial in the pair variables.
pub fn cayley_menger_sq(vertices: &[usize], vars: &Arc<VarSet>) -> MultiPoly {
    let k = vertices.len();
    assert!(k >= 2, "a simplex needs at least two vertices");
    poly_det(&cayley_menger_matrix(vertices, vars)).scale(&cm_normalization(k))
}

/// Squared volume at a point, `rho[pair_index(i, j)]` holding `ρ_ij`.
pub fn cayley_menger_value(vertices: &[usize], vars: &VarSet, rho: &[Rational]) -> Rational {
    let k = vertices.len();
    let mut m = RatMatrix::zeros(k + 1);
    for a in 1..=k {
        m.set(0, a, Rational::one());
        m.set(a, 0, Rational::one());
        for b in a + 1..=k {
            let (i, j) = (vertices[a - 1].min(vertices[b - 1]), vertices[a - 1].max(vertices[b - 1]));
            let v = rho[vars.pair_index(i, j).expect("vertex pair in variable set")].clone();
            m.set(a, b, v.clone());
            m.set(b, a, v);
        }
    }
    m.det() * cm_normalization(k)
}

/// Gradient of the squared volume of the full simplex on particles
/// `1..=n` with respect to the pair variables, at a point. Each `ρ_ij`
/// sits in two symmetric entries, so the derivative of the determinant is
/// twice the cofactor.
pub fn cayley_menger_gradient(n: usize, vars: &VarSet, rho: &[Rational]) -> Vec<Rational> {
    let size = n + 1;
    let entry = |a: usize, b: usize| -> Rational {
        if a == b {
            Rational::zero()
        } else if a == 0 || b == 0 {
            Rational::one()
        } else {
            rho[vars.pair_index(a.min(b), a.max(b)).expect("pair")].clone()
        }
    };
    let norm = cm_normalization(n);
    (0..vars.pair_vars())
        .map(|k| {
            let (i, j) = vars.pair_of(k).expect("pair variable");
            let minor: Vec<Vec<Rational>> = (0..size)
                .filter(|&a| a != i)
                .map(|a| (0..size).filter(|&b| b != j).map(|b| entry(a, b)).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            RatMatrix::from_rows(minor).det() * Rational::from_integer(BigInt::from(2 * sign)) * &norm
        })
        .collect()
}

/// `c_n(m) = Π_{k=1}^{n-1} 2^k (k!)^2 · (Σ m) / (Π m)^2`
pub fn mass_constant(cfg: &MassConfig) -> Rational {
    let mut c = Rational::one();
    for k in 1..cfg.n as u32 {
        let f = factorial(k);
        c *= Rational::from_integer(BigInt::from(2).pow(k) * &f * &f);
    }
    let prod = cfg.masses.iter().fold(Rational::one(), |a, m| a * m);
    c * cfg.total_mass() / (&prod * &prod)
}

/// Squared volumes of all faces and their weighted sums `Ṽ_k²`.
#[derive(Clone, Debug)]
pub struct VolumeSet {
    pub vars: Arc<VarSet>,
    /// `faces[k]` lists `(vertices, V²)` for every `k`-subset, `k = 2..=n`.
    pub faces: Vec<Vec<(Vec<usize>, MultiPoly)>>,
    /// `tilde[k]` is `Ṽ_k²` for `k = 1..=n`; `tilde[0]` is unused and 1.
    pub tilde: Vec<MultiPoly>,
    pub f1: MultiPoly,
    pub c_n: Rational,
}

impl VolumeSet {
    pub fn tilde(&self, k: usize) -> &MultiPoly {
        &self.tilde[k]
    }
}

/// Weight of the `k`-face on `face` in `Ṽ_k²`: `m_i m_j` on edges and
/// `1/m_q` on the triangle opposite vertex `q` of a tetrahedron. Only
/// defined for `n ≤ 4`; for `n ≥ 5` all masses must be equal and the sums
/// are unweighted.
pub(crate) fn face_weight(cfg: &MassConfig, face: &[usize]) -> Result<Rational, ModelError> {
    if cfg.n >= 5 {
        if !cfg.equal_masses() {
            return Err(ModelError::UnsupportedWeighting { n: cfg.n });
        }
        return Ok(Rational::one());
    }
    Ok(match face.len() {
        2 => &cfg.masses[face[0] - 1] * &cfg.masses[face[1] - 1],
        3 if cfg.n == 4 => {
            let q = (1..=4).find(|v| !face.contains(v)).expect("triangle in tetrahedron");
            cfg.masses[q - 1].recip()
        }
        _ => Rational::one(),
    })
}

pub fn weighted_volume_sums(cfg: &MassConfig) -> Result<VolumeSet, ModelError> {
    MassConfig::new_any_dimension(cfg.n, cfg.masses.clone(), cfg.d)?;
    let vars = Arc::new(VarSet::relative(cfg.n));
    let mut faces = vec![Vec::new(), Vec::new()];
    let mut tilde = vec![MultiPoly::one(&vars), MultiPoly::one(&vars)];
    for k in 2..=cfg.n {
        let mut level = Vec::new();
        let mut sum = MultiPoly::zero(&vars);
        for s in subsets(cfg.n, k) {
            let face: Vec<usize> = s.iter().map(|v| v + 1).collect();
            let v2 = cayley_menger_sq(&face, &vars);
            sum += &v2.scale(&face_weight(cfg, &face)?);
            level.push((face, v2));
        }
        faces.push(level);
        tilde.push(sum);
    }
    let f1 = faces[cfg.n][0].1.clone();
    Ok(VolumeSet {
        vars,
        faces,
        tilde,
        f1,
        c_n: mass_constant(cfg),
    })
}

/// `Ṽ_k²` values at a point, by exact rational determinants.
pub(crate) fn tilde_values(cfg: &MassConfig, vars: &VarSet, rho: &[Rational]) -> Result<Vec<Rational>, ModelError> {
    let mut out = vec![Rational::one(), Rational::one()];
    for k in 2..=cfg.n {
        let mut sum = Rational::zero();
        for s in subsets(cfg.n, k) {
            let face: Vec<usize> = s.iter().map(|v| v + 1).collect();
            sum += cayley_menger_value(&face, vars, rho) * face_weight(cfg, &face)?;
        }
        out.push(sum);
    }
    Ok(out)
}
