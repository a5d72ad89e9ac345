use std::sync::Arc;

use num_traits::{One, Zero};

use super::{AlgebraError, MultiPoly, Rational, VarSet};

/// Default cap on the number of terms in any Bareiss intermediate.
pub const DEFAULT_TERM_BUDGET: usize = 10_000_000;

/// Square matrix of polynomials over one variable set, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    vars: Arc<VarSet>,
    dim: usize,
    entries: Vec<MultiPoly>,
    symmetric: bool,
}

impl PolyMatrix {
    pub fn zeros(vars: &Arc<VarSet>, dim: usize) -> Self {
        PolyMatrix {
            vars: vars.clone(),
            dim,
            entries: vec![MultiPoly::zero(vars); dim * dim],
            symmetric: false,
        }
    }

    pub fn from_rows(vars: &Arc<VarSet>, rows: Vec<Vec<MultiPoly>>) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            entries.extend(row);
        }
        PolyMatrix {
            vars: vars.clone(),
            dim,
            entries,
            symmetric: false,
        }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: MultiPoly) {
        self.entries[i * self.dim + j] = value;
    }

    /// Marks the matrix symmetric after checking it.
    pub fn flag_symmetric(&mut self) -> bool {
        self.symmetric = self.is_symmetric();
        self.symmetric
    }

    pub fn symmetric_flag(&self) -> bool {
        self.symmetric
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn eval(&self, point: &[Rational]) -> RatMatrix {
        RatMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|p| p.eval(point)).collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn scale_row(&mut self, i: usize, c: &Rational) {
        for j in 0..self.dim {
            let v = self.get(i, j).scale(c);
            self.set(i, j, v);
        }
        self.symmetric = false;
    }
}

/// Exact determinant with the default term budget. Dimensions up to 4 use
/// cofactor expansion, larger ones fraction-free elimination.
pub fn poly_det(m: &PolyMatrix) -> MultiPoly {
    poly_det_budgeted(m, usize::MAX).expect("unbounded budget cannot be exceeded")
}

pub fn poly_det_budgeted(m: &PolyMatrix, budget: usize) -> Result<MultiPoly, AlgebraError> {
    if m.dim == 0 {
        return Ok(MultiPoly::one(&m.vars));
    }
    if m.dim <= 4 {
        let idx: Vec<usize> = (0..m.dim).collect();
        return Ok(cofactor(m, 0, &idx));
    }
    bareiss(m, budget)
}

fn cofactor(m: &PolyMatrix, row: usize, cols: &[usize]) -> MultiPoly {
    if cols.len() == 1 {
        return m.get(row, cols[0]).clone();
    }
    let mut acc = MultiPoly::zero(&m.vars);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &cofactor(m, row + 1, &rest);
        if pos % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn bareiss(m: &PolyMatrix, budget: usize) -> Result<MultiPoly, AlgebraError> {
    let n = m.dim;
    let mut a: Vec<Vec<MultiPoly>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut prev = MultiPoly::one(&m.vars);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(MultiPoly::zero(&m.vars));
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                if cross.num_terms() > budget {
                    return Err(AlgebraError::BudgetExceeded { budget });
                }
                a[i][j] = cross.div_exact(&prev)?;
            }
            a[i][k] = MultiPoly::zero(&m.vars);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Dense square matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(dim: usize) -> Self {
        RatMatrix {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let dim = rows.len();
        let entries: Vec<Rational> = rows.into_iter().flatten().collect();
        assert_eq!(entries.len(), dim * dim, "matrix must be square");
        RatMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn det(&self) -> Rational {
        self.leading_minor(self.dim)
    }

    /// Determinant of the top-left `k × k` block, by Gaussian elimination.
    pub fn leading_minor(&self, k: usize) -> Rational {
        let mut a: Vec<Vec<Rational>> = (0..k).map(|i| (0..k).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut det = Rational::one();
        for c in 0..k {
            let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det *= &pivot;
            for r in c + 1..k {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &pivot;
                for j in c..k {
                    let v = &f * &a[c][j];
                    a[r][j] -= v;
                }
            }
        }
        det
    }

    /// All leading principal minors, sizes 1 through `dim`.
    pub fn leading_minors(&self) -> Vec<Rational> {
        let mut a: Vec<Vec<Rational>> = (0..self.dim).map(|i| self.entries[i * self.dim..(i + 1) * self.dim].to_vec()).collect();
        let mut out = Vec::with_capacity(self.dim);
        let mut acc = Rational::one();
        // Elimination without row swaps: a zero pivot means that minor is zero,
        // after which later minors need the pivoting path.
        for c in 0..self.dim {
            if a[c][c].is_zero() {
                out.extend((c + 1..=self.dim).map(|k| self.leading_minor(k)));
                return out;
            }
            acc *= &a[c][c];
            out.push(acc.clone());
            for r in c + 1..self.dim {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &a[c][c];
                for j in c..self.dim {
                    let v = &f * &a[c][j];
                    a[r][j] -= v;
                }
            }
        }
        out
    }

    /// Solves `self · x = rhs`.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        let n = self.dim;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = self.entries[i * n..(i + 1) * n].to_vec();
                row.push(rhs[i].clone());
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(AlgebraError::Singular)?;
            a.swap(p, c);
            let pivot = a[c][c].clone();
            for j in c..=n {
                a[c][j] /= &pivot;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for j in c..=n {
                    let v = &f * &a[c][j];
                    a[r][j] -= v;
                }
            }
        }
        Ok(a.into_iter().map(|row| row[n].clone()).collect())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * &v[j]).fold(Rational::zero(), |a, b| a + b))
            .collect()
    }
}
