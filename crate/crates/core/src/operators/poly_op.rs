use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{multi_binomial, sub_indices, OperatorError};
use crate::algebra::{assert_same_vars, AlgebraError, Monomial, MultiPoly, Rational, VarSet};

/// Largest total derivative order any operator may carry.
pub const MAX_ORDER: u32 = 4;

/// `Σ_α c_α(ρ) ∂^α` with polynomial coefficients, keyed by the multi-index α.
#[derive(Clone, PartialEq)]
pub struct PolyDiffOp {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, MultiPoly>,
}

impl PolyDiffOp {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        PolyDiffOp {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(vars: &Arc<VarSet>) -> Self {
        Self::multiplication(MultiPoly::one(vars))
    }

    /// The operator `f ↦ p·f`.
    pub fn multiplication(p: MultiPoly) -> Self {
        let vars = p.vars().clone();
        let mut op = Self::zero(&vars);
        op.add_term(Monomial::one(vars.len()), p);
        op
    }

    /// `∂_k`
    pub fn partial(vars: &Arc<VarSet>, k: usize) -> Self {
        let mut op = Self::zero(vars);
        op.add_term(Monomial::var(vars.len(), k, 1), MultiPoly::one(vars));
        op
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn add_term(&mut self, alpha: Monomial, coeff: MultiPoly) {
        debug_assert_eq!(alpha.len(), self.vars.len());
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&alpha) {
            Some(existing) => {
                *existing += &coeff;
                if existing.is_zero() {
                    self.terms.remove(&alpha);
                }
            }
            None => {
                self.terms.insert(alpha, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn coeff(&self, alpha: &Monomial) -> MultiPoly {
        self.terms.get(alpha).cloned().unwrap_or_else(|| MultiPoly::zero(&self.vars))
    }

    /// Coefficient of `∂_i ∂_j` (or `∂_i²` when `i == j`).
    pub fn coeff2(&self, i: usize, j: usize) -> MultiPoly {
        let mut alpha = Monomial::var(self.vars.len(), i, 1);
        alpha = alpha.mul(&Monomial::var(self.vars.len(), j, 1));
        self.coeff(&alpha)
    }

    pub fn coeff1(&self, i: usize) -> MultiPoly {
        self.coeff(&Monomial::var(self.vars.len(), i, 1))
    }

    pub fn coeff0(&self) -> MultiPoly {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    /// Terms in ascending graded order of the multi-index.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Part of exact total order `k`.
    pub fn part_of_order(&self, k: u32) -> PolyDiffOp {
        PolyDiffOp {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(a, _)| a.degree() == k).map(|(a, c)| (a.clone(), c.clone())).collect(),
        }
    }

    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        assert_same_vars(&self.vars, p.vars());
        let mut acc = MultiPoly::zero(&self.vars);
        for (alpha, c) in &self.terms {
            let d = p.derivative_multi(alpha);
            if !d.is_zero() {
                acc += &(c * &d);
            }
        }
        acc
    }

    /// `self ∘ other`, expanded with the Leibniz rule.
    pub fn compose(&self, other: &PolyDiffOp) -> Result<PolyDiffOp, OperatorError> {
        assert_same_vars(&self.vars, other.vars());
        let mut out = PolyDiffOp::zero(&self.vars);
        for (alpha, c) in &self.terms {
            let gammas = sub_indices(alpha);
            for (beta, e) in &other.terms {
                for gamma in &gammas {
                    let de = e.derivative_multi(gamma);
                    if de.is_zero() {
                        continue;
                    }
                    let rest = alpha.checked_div(gamma).expect("gamma ≤ alpha").mul(beta);
                    if rest.degree() > MAX_ORDER {
                        return Err(OperatorError::OrderCap { order: rest.degree() });
                    }
                    let binom = Rational::from_integer(multi_binomial(alpha.exponents(), gamma.exponents()));
                    out.add_term(rest, (c * &de).scale(&binom));
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ other − other ∘ self`
    pub fn commutator(&self, other: &PolyDiffOp) -> Result<PolyDiffOp, OperatorError> {
        Ok(self.compose(other)? - other.compose(self)?)
    }

    pub fn scale(&self, c: &Rational) -> PolyDiffOp {
        if c.is_zero() {
            return PolyDiffOp::zero(&self.vars);
        }
        PolyDiffOp {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(a, p)| (a.clone(), p.scale(c))).collect(),
        }
    }

    /// Left multiplication by a polynomial: `p·self`.
    pub fn mul_left(&self, p: &MultiPoly) -> PolyDiffOp {
        let mut out = PolyDiffOp::zero(&self.vars);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c * p);
        }
        out
    }

    /// `e^{a·ρ} ∘ self ∘ e^{−a·ρ}`: each `∂_μ` becomes `∂_μ − a_μ`.
    pub fn conjugate_exp_linear(&self, a: &[Rational]) -> PolyDiffOp {
        assert_eq!(a.len(), self.vars.len(), "one gauge entry per variable");
        let mut out = PolyDiffOp::zero(&self.vars);
        for (alpha, c) in &self.terms {
            for gamma in sub_indices(alpha) {
                let mut factor = Rational::from_integer(multi_binomial(alpha.exponents(), gamma.exponents()));
                for (k, (&top, &g)) in alpha.exponents().iter().zip(gamma.exponents()).enumerate() {
                    for _ in 0..top - g {
                        factor *= -&a[k];
                    }
                }
                if factor.is_zero() {
                    continue;
                }
                out.add_term(gamma, c.scale(&factor));
            }
        }
        out
    }

    /// Second-order part with each `∂_μ` replaced by a commuting momentum
    /// `p_μ`, as a polynomial over the variables followed by one momentum
    /// per variable. Lower-order terms are dropped.
    pub fn principal_symbol(&self) -> Result<MultiPoly, OperatorError> {
        let order = self.order().unwrap_or(0);
        if order > 2 {
            return Err(OperatorError::OrderTooHigh { order, max: 2 });
        }
        let momenta: Vec<String> = self.vars.names().iter().map(|v| format!("p_{v}")).collect();
        let extra: Vec<&str> = momenta.iter().map(String::as_str).collect();
        let doubled = Arc::new(self.vars.with_extra(&extra)?);
        let m = self.vars.len();
        let mut out = MultiPoly::zero(&doubled);
        for (alpha, c) in &self.terms {
            if alpha.degree() != 2 {
                continue;
            }
            let lifted = c.remap(&doubled)?;
            let mut exps = vec![0u16; 2 * m];
            exps[m..].copy_from_slice(alpha.exponents());
            out += &lifted.mul_term(&Monomial::from_exponents(&exps), &Rational::one());
        }
        Ok(out)
    }

    /// Re-expresses the operator over `target`, matching variables by name.
    /// Every variable that is differentiated must exist in `target`.
    pub fn remap(&self, target: &Arc<VarSet>) -> Result<PolyDiffOp, AlgebraError> {
        let mut out = PolyDiffOp::zero(target);
        for (alpha, c) in &self.terms {
            let mut exps = vec![0u16; target.len()];
            for (k, &e) in alpha.exponents().iter().enumerate() {
                if e > 0 {
                    let t = target
                        .index_of(self.vars.name(k))
                        .ok_or_else(|| AlgebraError::UnknownVariable(self.vars.name(k).to_string()))?;
                    exps[t] = e;
                }
            }
            out.add_term(Monomial::from_exponents(&exps), c.remap(target)?);
        }
        Ok(out)
    }

    /// Renames variable `k` to `perm[k]` in coefficients and derivatives.
    pub fn permute(&self, perm: &[usize]) -> PolyDiffOp {
        let mut out = PolyDiffOp::zero(&self.vars);
        for (alpha, c) in &self.terms {
            let mut exps = vec![0u16; self.vars.len()];
            for (k, &e) in alpha.exponents().iter().enumerate() {
                exps[perm[k]] += e;
            }
            out.add_term(Monomial::from_exponents(&exps), c.permute(perm));
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(&MultiPoly) -> MultiPoly) -> PolyDiffOp {
        let mut out = PolyDiffOp::zero(&self.vars);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), f(c));
        }
        out
    }

    /// One line per term, highest derivative first:
    /// `coeff :: d[rho_1_2]^2 d[rho_1_3]`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    fn combine(&self, other: &PolyDiffOp, negate: bool) -> PolyDiffOp {
        assert_same_vars(&self.vars, other.vars());
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), if negate { -c } else { c.clone() });
        }
        out
    }
}

pub(crate) fn write_derivative(f: &mut impl fmt::Write, vars: &VarSet, alpha: &Monomial) -> fmt::Result {
    if alpha.is_one() {
        return f.write_str("1");
    }
    let mut first = true;
    for (k, &e) in alpha.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        write!(f, "d[{}]", vars.name(k))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for PolyDiffOp {
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

impl fmt::Debug for PolyDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyDiffOp[\n{self}\n]")
    }
}

impl std::ops::Add for PolyDiffOp {
    type Output = PolyDiffOp;
    fn add(self, rhs: PolyDiffOp) -> PolyDiffOp {
        self.combine(&rhs, false)
    }
}

impl std::ops::Sub for PolyDiffOp {
    type Output = PolyDiffOp;
    fn sub(self, rhs: PolyDiffOp) -> PolyDiffOp {
        self.combine(&rhs, true)
    }
}

impl<'a> std::ops::Add<&'a PolyDiffOp> for &'a PolyDiffOp {
    type Output = PolyDiffOp;
    fn add(self, rhs: &'a PolyDiffOp) -> PolyDiffOp {
        self.combine(rhs, false)
    }
}

impl<'a> std::ops::Sub<&'a PolyDiffOp> for &'a PolyDiffOp {
    type Output = PolyDiffOp;
    fn sub(self, rhs: &'a PolyDiffOp) -> PolyDiffOp {
        self.combine(rhs, true)
    }
}

impl std::ops::Neg for &PolyDiffOp {
    type Output = PolyDiffOp;
    fn neg(self) -> PolyDiffOp {
        self.scale(&-Rational::one())
    }
}
