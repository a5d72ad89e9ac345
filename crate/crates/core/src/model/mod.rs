//! The n-body constructions: the radial operator, simplex volumes and the
//! factor polynomials of its metric determinant, reference effective
//! potentials, symmetry operators, the sl(M+1) generator form, Jacobi
//! coordinates and heavy-particle limits.

mod config;
mod jacobi;
mod limit;
mod radial;
mod reference;
mod sl;
mod symmetry;
mod volumes;

pub use config::MassConfig;
pub use jacobi::{jacobi_map, JacobiMap, JacobiRow};
pub use limit::{frozen_mass_limit, limit_convergence, LimitStep};
pub use radial::{build_delta_rad, build_from_inverse_masses, RadialOperator};
pub use reference::{gauge_spec, reference_f2, reference_veff, PointVolumes};
pub use sl::{expand_decomposition, sl_decomposition, GeneratorDecomposition, Word};
pub use symmetry::{
    bracket_coordinates, killing_form, l4_coordinates, so3_basis, symmetry_k12, symmetry_l4, symmetry_l4_symbolic, So3Basis,
};
pub use volumes::{cayley_menger_gradient, cayley_menger_matrix, cayley_menger_sq, cayley_menger_value, mass_constant, weighted_volume_sums, VolumeSet};

use crate::algebra::AlgebraError;
use crate::operators::OperatorError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("mass-weighted volume sums are only defined for n <= 4 or equal masses (n = {n})")]
    UnsupportedWeighting { n: usize },
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("generator expansion does not reproduce the operator: {0}")]
    DecompositionFailed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
