use std::collections::HashMap;
use std::fmt;

use super::AlgebraError;

/// Ordered, duplicate-free list of variable names.
///
/// Relative-distance variables are named `rho_i_j` and ordered
/// lexicographically on the particle pair `(i, j)`, `i < j`, so the pair
/// `(i, j)` maps to a single index `k` in `0..n(n-1)/2`. Extra parameter
/// variables (symbolic dimension, symmetry parameters, momenta) are
/// appended after the pair variables.
#[derive(Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
    particles: Option<usize>,
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn rho_name(i: usize, j: usize) -> String {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    format!("rho_{a}_{b}")
}

/// Particle pairs `(i, j)`, 1-based, in canonical order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

impl VarSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (k, name) in names.iter().enumerate() {
            if index.insert(name.clone(), k).is_some() {
                return Err(AlgebraError::DuplicateVariable(name.clone()));
            }
        }
        Ok(VarSet {
            names,
            index,
            particles: None,
        })
    }

    /// The `n(n-1)/2` relative-distance variables of an `n`-particle system.
    pub fn relative(n: usize) -> Self {
        let names = pairs(n).into_iter().map(|(i, j)| rho_name(i, j));
        let mut vars = VarSet::new(names).expect("pair names are unique");
        vars.particles = Some(n);
        vars
    }

    /// Same variables followed by `extra`.
    pub fn with_extra(&self, extra: &[&str]) -> Result<Self, AlgebraError> {
        let mut out = VarSet::new(self.names.iter().cloned().chain(extra.iter().map(|s| s.to_string())))?;
        out.particles = self.particles;
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, k: usize) -> &str {
        &self.names[k]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Particle count when this set starts with relative-distance variables.
    pub fn particles(&self) -> Option<usize> {
        self.particles
    }

    /// Number of leading pair variables.
    pub fn pair_vars(&self) -> usize {
        self.particles.map(pair_count).unwrap_or(0)
    }

    /// Index of `rho_i_j` (1-based particles, either order).
    pub fn pair_index(&self, i: usize, j: usize) -> Option<usize> {
        let n = self.particles?;
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return None;
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        // pairs starting with particles 1..a-1 come first
        let before: usize = (1..a).map(|p| n - p).sum();
        Some(before + (b - a - 1))
    }

    /// Particle pair of pair variable `k`.
    pub fn pair_of(&self, k: usize) -> Option<(usize, usize)> {
        let n = self.particles?;
        pairs(n).get(k).copied()
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_pair_order() {
        let vars = VarSet::relative(4);
        let names: Vec<&str> = vars.names().iter().map(String::as_str).collect();
        assert_eq!(
            names,
            ["rho_1_2", "rho_1_3", "rho_1_4", "rho_2_3", "rho_2_4", "rho_3_4"]
        );
    }

    #[test]
    fn pair_index_is_a_bijection() {
        for n in 2..=7 {
            let vars = VarSet::relative(n);
            for (k, (i, j)) in pairs(n).into_iter().enumerate() {
                assert_eq!(vars.pair_index(i, j), Some(k));
                assert_eq!(vars.pair_index(j, i), Some(k));
                assert_eq!(vars.pair_of(k), Some((i, j)));
            }
            assert_eq!(vars.len(), pair_count(n));
        }
    }

    #[test]
    fn rejects_duplicates() {
        assert!(VarSet::new(["x", "y", "x"]).is_err());
        assert!(VarSet::relative(3).with_extra(&["rho_1_2"]).is_err());
    }
}
