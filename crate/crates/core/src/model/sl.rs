use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::{ModelError, RadialOperator};
use crate::algebra::{int, pairs, MultiPoly, Rational, VarSet};
use crate::operators::PolyDiffOp;

/// A word in the affine generators `J_k^− = ∂_k` and `J_{ij}^0 = u_i ∂_j`
/// (indices 0-based over the pair variables).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Word {
    Lower(usize),
    /// `J_{ij}^0 J_k^−`
    ZeroLower(usize, usize, usize),
}

#[derive(Clone, Debug)]
pub struct GeneratorDecomposition {
    /// `M = n(n−1)/2`
    pub m: usize,
    pub words: Vec<(Word, Rational)>,
}

impl GeneratorDecomposition {
    pub fn to_text(&self, vars: &VarSet) -> String {
        let name = |k: usize| vars.name(k).trim_start_matches("rho_").to_string();
        self.words
            .iter()
            .map(|(w, c)| match w {
                Word::Lower(k) => format!("{c} :: J-[{}]", name(*k)),
                Word::ZeroLower(i, j, k) => format!("{c} :: J0[{},{}] J-[{}]", name(*i), name(*j), name(*k)),
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Lower(k) => write!(f, "J-[{k}]"),
            Word::ZeroLower(i, j, k) => write!(f, "J0[{i},{j}] J-[{k}]"),
        }
    }
}

fn lower(vars: &Arc<VarSet>, k: usize) -> PolyDiffOp {
    PolyDiffOp::partial(vars, k)
}

fn zero_gen(vars: &Arc<VarSet>, i: usize, j: usize) -> PolyDiffOp {
    PolyDiffOp::partial(vars, j).mul_left(&MultiPoly::var(vars, i))
}

/// Expands a decomposition into an explicit operator by composing the
/// generators.
pub fn expand_decomposition(vars: &Arc<VarSet>, dec: &GeneratorDecomposition) -> Result<PolyDiffOp, ModelError> {
    let mut out = PolyDiffOp::zero(vars);
    for (w, c) in &dec.words {
        let term = match w {
            Word::Lower(k) => lower(vars, *k),
            Word::ZeroLower(i, j, k) => zero_gen(vars, *i, *j).compose(&lower(vars, *k))?,
        };
        out = out + term.scale(c);
    }
    Ok(out)
}

/// Writes `Δ_rad` in the affine generators:
/// `2(w_i+w_j) J⁰_kk J⁻_k` for each pair `k = {ij}`,
/// `2 w_i (J⁰_μμ J⁻_ν + J⁰_νν J⁻_μ − J⁰_λμ J⁻_ν)` for pairs `μ = {ij}`,
/// `ν = {ik}` sharing particle `i` with `λ = {jk}`, and
/// `d(w_i+w_j) J⁻_k`. The expansion is compared with the operator.
pub fn sl_decomposition(r: &RadialOperator) -> Result<GeneratorDecomposition, ModelError> {
    let vars = &r.vars;
    let w = &r.inverse_masses;
    let idx = |i: usize, j: usize| vars.pair_index(i.min(j), i.max(j)).expect("pair");
    let mut words = Vec::new();
    for (i, j) in pairs(r.n) {
        let k = idx(i, j);
        words.push((Word::ZeroLower(k, k, k), int(2) * (&w[i - 1] + &w[j - 1])));
    }
    for i in 1..=r.n {
        for j in 1..=r.n {
            for k in j + 1..=r.n {
                if j == i || k == i || w[i - 1] == int(0) {
                    continue;
                }
                let (mu, nu, lam) = (idx(i, j), idx(i, k), idx(j, k));
                let c = int(2) * &w[i - 1];
                words.push((Word::ZeroLower(mu, mu, nu), c.clone()));
                words.push((Word::ZeroLower(nu, nu, mu), c.clone()));
                words.push((Word::ZeroLower(lam, mu, nu), -c));
            }
        }
    }
    for (i, j) in pairs(r.n) {
        let kappa = &w[i - 1] + &w[j - 1];
        if kappa != int(0) {
            words.push((Word::Lower(idx(i, j)), int(r.d) * kappa));
        }
    }
    let dec = GeneratorDecomposition { m: vars.len(), words };
    let expanded = expand_decomposition(vars, &dec)?;
    if expanded != r.op {
        let diff = expanded - r.op.clone();
        return Err(ModelError::DecompositionFailed(diff.to_text()));
    }
    Ok(dec)
}
