use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ModelError;
use crate::algebra::rational::vec_as_string;
use crate::algebra::{int, Rational};

/// Particle count, masses and space dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassConfig {
    pub n: usize,
    #[serde(with = "vec_as_string")]
    pub masses: Vec<Rational>,
    pub d: i64,
}

impl MassConfig {
    /// Checks `n ≥ 2`, `n` positive masses and `d ≥ n − 1`.
    pub fn new(n: usize, masses: Vec<Rational>, d: i64) -> Result<Self, ModelError> {
        let cfg = Self::new_any_dimension(n, masses, d)?;
        if !cfg.in_validity_domain() {
            return Err(ModelError::InvalidConfig(format!("d = {d} is below n - 1 = {}", n - 1)));
        }
        Ok(cfg)
    }

    /// Like [`MassConfig::new`] but accepts `1 ≤ d < n − 1`, which lies
    /// outside the domain where the radial reduction is valid.
    pub fn new_any_dimension(n: usize, masses: Vec<Rational>, d: i64) -> Result<Self, ModelError> {
        if n < 2 {
            return Err(ModelError::InvalidConfig(format!("need at least two particles, got {n}")));
        }
        if masses.len() != n {
            return Err(ModelError::InvalidConfig(format!("{} masses given for n = {n}", masses.len())));
        }
        if let Some(m) = masses.iter().find(|m| !m.is_positive()) {
            return Err(ModelError::InvalidConfig(format!("mass {m} is not positive")));
        }
        if d < 1 {
            return Err(ModelError::InvalidConfig(format!("dimension {d} is not positive")));
        }
        Ok(MassConfig { n, masses, d })
    }

    pub fn equal(n: usize, d: i64) -> Result<Self, ModelError> {
        Self::new(n, vec![Rational::one(); n], d)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        Self::new(self.n, self.masses.clone(), self.d).map(|_| ())
    }

    pub fn in_validity_domain(&self) -> bool {
        self.d >= self.n as i64 - 1
    }

    pub fn total_mass(&self) -> Rational {
        self.masses.iter().fold(Rational::zero(), |a, m| a + m)
    }

    pub fn inverse_masses(&self) -> Vec<Rational> {
        self.masses.iter().map(|m| m.recip()).collect()
    }

    pub fn equal_masses(&self) -> bool {
        self.masses.iter().all(|m| m == &self.masses[0])
    }

    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn d_rational(&self) -> Rational {
        int(self.d)
    }

    pub fn with_d(&self, d: i64) -> Result<Self, ModelError> {
        Self::new(self.n, self.masses.clone(), d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;

    #[test]
    fn validation() {
        assert!(MassConfig::new(3, vec![int(1), int(0), int(1)], 3).is_err());
        assert!(MassConfig::new(3, vec![int(1), int(1)], 3).is_err());
        assert!(MassConfig::new(4, vec![int(1); 4], 2).is_err());
        let low = MassConfig::new_any_dimension(4, vec![int(1); 4], 2).unwrap();
        assert!(!low.in_validity_domain());
        assert!(MassConfig::new(1, vec![int(1)], 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let cfg: MassConfig = serde_json::from_str(r#"{"n":4,"masses":["1","3/2","2","7"],"d":3}"#).unwrap();
        assert_eq!(cfg.masses[1], frac(3, 2));
        assert_eq!(cfg.total_mass(), frac(23, 2));
        let text = serde_json::to_string(&cfg).unwrap();
        assert_eq!(text, r#"{"n":4,"masses":["1","3/2","2","7"],"d":3}"#);
    }
}
