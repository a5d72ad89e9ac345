use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::poly_op::write_derivative;
use super::PolyDiffOp;
use crate::algebra::{Monomial, MultiPoly, RationalFn, VarSet};

/// Differential operator with rational-function coefficients.
#[derive(Clone)]
pub struct RatDiffOp {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, RationalFn>,
}

impl RatDiffOp {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        RatDiffOp {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_poly_op(op: &PolyDiffOp) -> Self {
        let mut out = Self::zero(op.vars());
        for (a, c) in op.terms() {
            out.set(a.clone(), RationalFn::from_poly(c.clone()));
        }
        out
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    /// Replaces the coefficient of `∂^alpha`.
    pub fn set(&mut self, alpha: Monomial, coeff: RationalFn) {
        if coeff.is_zero() {
            self.terms.remove(&alpha);
        } else {
            self.terms.insert(alpha, coeff);
        }
    }

    pub fn coeff(&self, alpha: &Monomial) -> RationalFn {
        self.terms.get(alpha).cloned().unwrap_or_else(|| RationalFn::zero(&self.vars))
    }

    pub fn coeff0(&self) -> RationalFn {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RationalFn)> {
        self.terms.iter()
    }

    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn part_of_order(&self, k: u32) -> RatDiffOp {
        RatDiffOp {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(a, _)| a.degree() == k).map(|(a, c)| (a.clone(), c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &RatDiffOp) -> RatDiffOp {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            let v = out.coeff(a).sub(c);
            out.set(a.clone(), v);
        }
        out
    }

    pub fn add(&self, other: &RatDiffOp) -> RatDiffOp {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            let v = out.coeff(a).add(c);
            out.set(a.clone(), v);
        }
        out
    }

    /// Cross-multiplied residual of each coefficient of `self − other`;
    /// only nonzero residuals are returned.
    pub fn residuals(&self, other: &RatDiffOp) -> Vec<(Monomial, MultiPoly)> {
        let keys: BTreeSet<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .filter_map(|a| {
                let r = self.coeff(a).cross_residual(&other.coeff(a));
                (!r.is_zero()).then(|| (a.clone(), r))
            })
            .collect()
    }

    /// Equality by cross-multiplication, coefficient by coefficient.
    pub fn equals(&self, other: &RatDiffOp) -> bool {
        self.residuals(other).is_empty()
    }
}

impl fmt::Display for RatDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (alpha, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{c} :: ")?;
            write_derivative(f, &self.vars, alpha)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatDiffOp[\n{self}\n]")
    }
}
