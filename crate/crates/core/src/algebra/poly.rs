use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::{AlgebraError, Rational, VarSet};

pub type Exponents = SmallVec<[u16; 16]>;

/// Dense exponent vector over a fixed variable set.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors lexicographically. The same type doubles as a derivative
/// multi-index for differential operators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, k: usize, exp: u16) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[k] = exp;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Exponents>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality of the term
/// maps is polynomial equality.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, Rational>,
}

pub(crate) fn assert_same_vars(a: &Arc<VarSet>, b: &Arc<VarSet>) {
    assert!(
        Arc::ptr_eq(a, b) || **a == **b,
        "polynomials over different variable sets: {a:?} vs {b:?}"
    );
}

impl MultiPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<VarSet>, value: Rational) -> Self {
        Self::term(vars, Monomial::one(vars.len()), value)
    }

    pub fn term(vars: &Arc<VarSet>, mono: Monomial, coeff: Rational) -> Self {
        debug_assert_eq!(mono.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn var(vars: &Arc<VarSet>, k: usize) -> Self {
        Self::term(vars, Monomial::var(vars.len(), k, 1), Rational::one())
    }

    pub fn var_named(vars: &Arc<VarSet>, name: &str) -> Result<Self, AlgebraError> {
        let k = vars
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(vars, k))
    }

    /// Sums duplicate monomials and drops zeros.
    pub fn from_terms(vars: &Arc<VarSet>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_degree()
    }

    pub fn degree_in(&self, k: usize) -> u16 {
        self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// `self * coeff * mono`
    pub fn mul_term(&self, mono: &Monomial, coeff: &Rational) -> Self {
        if coeff.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.mul(mono), v * coeff)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = MultiPoly::one(&self.vars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, k: usize) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[k] = e - 1;
            out.insert(dm, c * Rational::from_integer(e.into()));
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    /// Mixed partial derivative `∂^alpha`.
    pub fn derivative_multi(&self, alpha: &Monomial) -> Self {
        let mut out = BTreeMap::new();
        'terms: for (m, c) in &self.terms {
            let mut dm = m.clone();
            let mut factor = num_bigint::BigInt::one();
            for (k, &a) in alpha.0.iter().enumerate() {
                let e = m.0[k];
                if e < a {
                    continue 'terms;
                }
                for j in 0..a {
                    factor *= e - j;
                }
                dm.0[k] = e - a;
            }
            out.insert(dm, c * Rational::from_integer(factor));
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    /// Evaluates at `point`, which lists one value per variable in
    /// variable-set order. Powers are tabulated once per variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len(), "point dimension mismatch");
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(point.len());
        for (k, x) in point.iter().enumerate() {
            let top = self.degree_in(k) as usize;
            let mut row = Vec::with_capacity(top + 1);
            row.push(Rational::one());
            for e in 1..=top {
                let next = &row[e - 1] * x;
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= &powers[k][e as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluates with values looked up by variable name. Only variables that
    /// actually occur must be assigned.
    pub fn eval_named(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, AlgebraError> {
        let mut point = Vec::with_capacity(self.vars.len());
        for k in 0..self.vars.len() {
            let name = self.vars.name(k);
            match assignment.get(name) {
                Some(v) => point.push(v.clone()),
                None if self.degree_in(k) == 0 => point.push(Rational::zero()),
                None => return Err(AlgebraError::MissingAssignment(name.to_string())),
            }
        }
        Ok(self.eval(&point))
    }

    /// Substitutes a value for variable `k`; the variable set is unchanged.
    pub fn substitute(&self, k: usize, value: &Rational) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[k];
            let mut nm = m.clone();
            nm.0[k] = 0;
            out.add_term(nm, c * super::rational::pow(value, e as u32));
        }
        out
    }

    /// Exact quotient `self / den`, by multivariate division in graded-lex
    /// order. Any nonzero remainder is reported as `NotDivisible`.
    pub fn div_exact(&self, den: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        assert_same_vars(&self.vars, &den.vars);
        let (lead_m, lead_c) = den.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quotient = MultiPoly::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.checked_div(lead_m) else {
                return Err(AlgebraError::NotDivisible {
                    remainder: rem.to_string(),
                });
            };
            let qc = c / lead_c;
            for (dm, dc) in &den.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Re-expresses the polynomial over `target`, matching variables by name.
    pub fn remap(&self, target: &Arc<VarSet>) -> Result<MultiPoly, AlgebraError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for k in 0..self.vars.len() {
            map.push(target.index_of(self.vars.name(k)));
        }
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut nm = Monomial::one(target.len());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let t = map[k].ok_or_else(|| AlgebraError::UnknownVariable(self.vars.name(k).to_string()))?;
                nm.0[t] += e;
            }
            out.add_term(nm, c.clone());
        }
        Ok(out)
    }

    /// Renames variable `k` to `perm[k]` within the same variable set.
    pub fn permute(&self, perm: &[usize]) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut nm = Monomial::one(self.vars.len());
            for (k, &e) in m.0.iter().enumerate() {
                nm.0[perm[k]] += e;
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Coefficients as a polynomial in variable `k`: entry `e` holds the
    /// coefficient of `x_k^e` (which no longer involves `x_k`).
    pub fn coefficients_in(&self, k: usize) -> Vec<MultiPoly> {
        let top = self.degree_in(k) as usize;
        let mut out = vec![MultiPoly::zero(&self.vars); top + 1];
        for (m, c) in &self.terms {
            let e = m.0[k] as usize;
            let mut nm = m.clone();
            nm.0[k] = 0;
            out[e].add_term(nm, c.clone());
        }
        out
    }

    fn mul_poly(&self, other: &MultiPoly) -> MultiPoly {
        assert_same_vars(&self.vars, &other.vars);
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len().max(other.terms.len()) * 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn add_poly(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        assert_same_vars(&self.vars, &other.vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c } else { c.clone() });
        }
        out
    }

    /// Text form used in reports: `c * rho_1_2^2 * rho_1_3 + ...`, highest
    /// graded-lex term first.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

fn write_monomial(f: &mut impl fmt::Write, vars: &VarSet, m: &Monomial, prefix: &str, sep: &str) -> fmt::Result {
    let mut first = true;
    for (k, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(sep)?;
        }
        first = false;
        write!(f, "{prefix}{}", vars.name(k))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            if idx == 0 {
                write!(f, "{c}")?;
            } else if negative {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if !m.is_one() {
                f.write_str(" * ")?;
                write_monomial(f, &self.vars, m, "", " * ")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                $body(self, rhs)
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                $body(&self, rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &MultiPoly, b: &MultiPoly| a.add_poly(b, false));
forward_binop!(Sub, sub, |a: &MultiPoly, b: &MultiPoly| a.add_poly(b, true));
forward_binop!(Mul, mul, |a: &MultiPoly, b: &MultiPoly| a.mul_poly(b));

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        assert_same_vars(&self.vars, &rhs.vars);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        assert_same_vars(&self.vars, &rhs.vars);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
