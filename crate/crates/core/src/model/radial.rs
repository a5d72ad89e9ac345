use std::sync::Arc;

use num_traits::Zero;

use super::{MassConfig, ModelError};
use crate::algebra::{int, pairs, Monomial, MultiPoly, PolyMatrix, Rational, VarSet};
use crate::operators::PolyDiffOp;

/// `Δ_rad = g^{μν}∂_μ∂_ν + b^μ∂_μ` in the pair variables `rho_i_j`.
#[derive(Clone, Debug)]
pub struct RadialOperator {
    pub n: usize,
    /// `1/m_i`; zero marks an infinitely heavy particle.
    pub inverse_masses: Vec<Rational>,
    pub d: i64,
    pub vars: Arc<VarSet>,
    pub g: PolyMatrix,
    pub b: Vec<Rational>,
    pub op: PolyDiffOp,
}

impl RadialOperator {
    /// Masses, when none is infinite.
    pub fn masses(&self) -> Option<Vec<Rational>> {
        self.inverse_masses.iter().map(|w| (!w.is_zero()).then(|| w.recip())).collect()
    }
}

pub fn build_delta_rad(cfg: &MassConfig) -> Result<RadialOperator, ModelError> {
    MassConfig::new_any_dimension(cfg.n, cfg.masses.clone(), cfg.d)?;
    Ok(build_from_inverse_masses(cfg.n, &cfg.inverse_masses(), cfg.d))
}

/// Builds the operator from `w_i = 1/m_i`:
/// diagonal `2(w_i + w_j) ρ_ij ∂²_ij`, cross terms for pairs sharing
/// particle `i` equal to `2 w_i (ρ_ij + ρ_ik − ρ_jk) ∂_ij ∂_ik`, drift
/// `d (w_i + w_j) ∂_ij`.
pub fn build_from_inverse_masses(n: usize, w: &[Rational], d: i64) -> RadialOperator {
    assert_eq!(w.len(), n, "one inverse mass per particle");
    let vars = Arc::new(VarSet::relative(n));
    let m = vars.len();
    let idx = |i: usize, j: usize| vars.pair_index(i, j).expect("valid pair");
    let rho = |i: usize, j: usize| MultiPoly::var(&vars, idx(i, j));
    let mut g = PolyMatrix::zeros(&vars, m);
    let mut b = vec![Rational::zero(); m];
    for (i, j) in pairs(n) {
        let k = idx(i, j);
        let kappa = &w[i - 1] + &w[j - 1];
        g.set(k, k, rho(i, j).scale(&(int(2) * &kappa)));
        b[k] = int(d) * &kappa;
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in j + 1..=n {
                if j == i || k == i {
                    continue;
                }
                let (mu, nu) = (idx(i, j), idx(i, k));
                let entry = (rho(i, j) + rho(i, k) - rho(j, k)).scale(&w[i - 1]);
                g.set(mu, nu, entry.clone());
                g.set(nu, mu, entry);
            }
        }
    }
    g.flag_symmetric();
    let mut op = PolyDiffOp::zero(&vars);
    for mu in 0..m {
        op.add_term(Monomial::var(m, mu, 2), g.get(mu, mu).clone());
        for nu in mu + 1..m {
            let alpha = Monomial::var(m, mu, 1).mul(&Monomial::var(m, nu, 1));
            op.add_term(alpha, g.get(mu, nu).scale(&int(2)));
        }
        op.add_term(Monomial::var(m, mu, 1), MultiPoly::constant(&vars, b[mu].clone()));
    }
    RadialOperator {
        n,
        inverse_masses: w.to_vec(),
        d,
        vars,
        g,
        b,
        op,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;

    #[test]
    fn two_body_operator() {
        let cfg = MassConfig::new(2, vec![int(2), int(3)], 3).unwrap();
        let r = build_delta_rad(&cfg).unwrap();
        assert_eq!(r.op.to_text(), "5/3 * rho_1_2 :: d[rho_1_2]^2\n5/2 :: d[rho_1_2]");
        assert_eq!(r.masses(), Some(vec![int(2), int(3)]));
    }

    #[test]
    fn disjoint_pairs_do_not_couple() {
        let cfg = MassConfig::new(4, vec![int(1), frac(3, 2), int(2), int(7)], 3).unwrap();
        let r = build_delta_rad(&cfg).unwrap();
        assert!(r.op.coeff2(0, 5).is_zero());
        assert!(r.op.coeff2(1, 4).is_zero());
        assert!(r.op.coeff2(2, 3).is_zero());
        // pairs (1,2),(1,3) share particle 1
        assert_eq!(r.op.coeff2(0, 1).to_string(), "2 * rho_1_2 + 2 * rho_1_3 - 2 * rho_2_3");
    }
}
