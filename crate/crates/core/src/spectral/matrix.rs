use num_traits::Zero;
use rayon::prelude::*;

use super::{MonomialBasis, SpectralError};
use crate::algebra::{MultiPoly, Rational};
use crate::operators::PolyDiffOp;

/// Exact matrix of an operator on a monomial basis, stored by columns.
/// Column `k` holds the coordinates of the image of basis element `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

pub fn operator_matrix(op: &PolyDiffOp, basis: &MonomialBasis) -> Result<OperatorMatrix, SpectralError> {
    if op.vars().len() != basis.nvars() {
        return Err(SpectralError::InvalidGauge("operator and basis disagree on the variable count".into()));
    }
    let vars = op.vars().clone();
    let columns: Vec<Result<Vec<(usize, Rational)>, SpectralError>> = basis
        .monomials()
        .par_iter()
        .map(|mono| {
            let image = op.apply(&MultiPoly::term(&vars, mono.clone(), Rational::from_integer(1.into())));
            let mut col = Vec::with_capacity(image.num_terms());
            for (m, c) in image.terms() {
                match basis.index_of(m) {
                    Some(row) => col.push((row, c.clone())),
                    None => {
                        return Err(SpectralError::NotInvariant {
                            witness: MultiPoly::term(&vars, m.clone(), c.clone()).to_string(),
                        })
                    }
                }
            }
            col.sort_by_key(|(r, _)| *r);
            Ok(col)
        })
        .collect();
    Ok(OperatorMatrix {
        dim: basis.len(),
        columns: columns.into_iter().collect::<Result<_, _>>()?,
    })
}

impl OperatorMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.columns[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|i| self.columns[col][i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn column(&self, col: usize) -> &[(usize, Rational)] {
        &self.columns[col]
    }

    pub fn nonzeros(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.dim).map(|k| self.get(k, k)).collect()
    }

    /// First nonzero entry below the diagonal.
    pub fn below_diagonal(&self) -> Option<(usize, usize)> {
        self.columns
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.iter().find(|(r, _)| *r > c).map(|(r, _)| (*r, c)))
    }

    /// First nonzero entry above the diagonal.
    pub fn above_diagonal(&self) -> Option<(usize, usize)> {
        self.columns
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.iter().find(|(r, _)| *r < c).map(|(r, _)| (*r, c)))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.below_diagonal().is_none()
    }

    pub fn is_triangular(&self) -> bool {
        self.below_diagonal().is_none() || self.above_diagonal().is_none()
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        self.columns.iter().enumerate().all(|(c, col)| col.iter().all(|(r, _)| *r < c))
    }

    /// Every column maps into monomials of strictly lower degree.
    pub fn lowers_degree(&self, basis: &MonomialBasis) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(c, col)| col.iter().all(|(r, _)| basis.get(*r).degree() < basis.get(c).degree()))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.columns[c] {
                out[*r] += a * x;
            }
        }
        out
    }

    /// Whether the `k`-th power annihilates every basis vector.
    pub fn power_vanishes(&self, k: u32) -> bool {
        (0..self.dim).into_par_iter().all(|c| {
            let mut v = vec![Rational::zero(); self.dim];
            v[c] = Rational::from_integer(1.into());
            for _ in 0..k {
                v = self.mul_vec(&v);
                if v.iter().all(Zero::is_zero) {
                    return true;
                }
            }
            v.iter().all(Zero::is_zero)
        })
    }

    /// Eigenvector of an upper-triangular matrix for the eigenvalue at
    /// diagonal position `k`, normalized so that component `k` is one and
    /// later components vanish. `None` when the eigenvalue sits in a
    /// nontrivial Jordan block.
    pub fn triangular_eigenvector(&self, k: usize) -> Option<Vec<Rational>> {
        let lambda = self.get(k, k);
        let mut v = vec![Rational::zero(); self.dim];
        v[k] = Rational::from_integer(1.into());
        // residual r = (A − λ) v restricted to rows < k, built column by column
        let mut rhs = vec![Rational::zero(); k];
        for (r, a) in &self.columns[k] {
            if *r < k {
                rhs[*r] += a;
            }
        }
        for j in (0..k).rev() {
            let pivot = self.get(j, j) - &lambda;
            if pivot.is_zero() {
                if !rhs[j].is_zero() {
                    return None;
                }
                continue;
            }
            let x = -&rhs[j] / pivot;
            for (r, a) in &self.columns[j] {
                if *r < j {
                    rhs[*r] += a * &x;
                }
            }
            v[j] = x;
        }
        Some(v)
    }
}
