use std::collections::HashMap;

use crate::algebra::Monomial;

/// Monomials of total degree at most `N` in `M` variables, ascending in
/// graded-lex order unless built from an explicit list.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    nvars: usize,
    max_degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, max_degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut exps = vec![0u16; nvars];
        for deg in 0..=max_degree {
            collect(0, deg, &mut exps, &mut monomials);
        }
        monomials.sort();
        Self::from_monomials(nvars, max_degree, monomials).expect("complete by construction")
    }

    /// A reordering of the full basis; `None` if `monomials` is not exactly
    /// the set of monomials of degree at most `max_degree`.
    pub fn from_monomials(nvars: usize, max_degree: u32, monomials: Vec<Monomial>) -> Option<Self> {
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let ok = index.len() == monomials.len()
            && monomials.len() == expected_size(nvars, max_degree)
            && monomials.iter().all(|m| m.len() == nvars && m.degree() <= max_degree);
        ok.then_some(MonomialBasis { nvars, max_degree, monomials, index })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, k: usize) -> &Monomial {
        &self.monomials[k]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// `C(N + M, M)`
fn expected_size(nvars: usize, max_degree: u32) -> usize {
    let (n, k) = (max_degree as usize + nvars, nvars);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn collect(k: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
    if k + 1 == exps.len() || exps.is_empty() {
        if let Some(last) = exps.last_mut() {
            *last = left as u16;
        } else if left > 0 {
            return;
        }
        out.push(Monomial::from_exponents(exps));
        return;
    }
    for e in (0..=left).rev() {
        exps[k] = e as u16;
        collect(k + 1, left - e, exps, out);
    }
    exps[k] = 0;
}
