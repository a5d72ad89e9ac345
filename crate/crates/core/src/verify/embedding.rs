use num_traits::{Signed, Zero};
use rand::Rng;

use super::VerifyError;
use crate::algebra::{pairs, Rational, VarSet};
use crate::model::{cayley_menger_value, MassConfig};

/// Draws allowed before giving up on a non-degenerate configuration.
pub const MAX_RETRIES: usize = 20;

#[derive(Clone, Debug)]
pub struct Embedding {
    /// `positions[i][s]`, particle `i`, Cartesian component `s`.
    pub positions: Vec<Vec<Rational>>,
    /// `ρ_ij = |r_i − r_j|²` in pair-variable order.
    pub rho: Vec<Rational>,
    pub volume_sq: Rational,
}

pub fn embed_points(positions: &[Vec<Rational>]) -> Vec<Rational> {
    pairs(positions.len())
        .into_iter()
        .map(|(i, j)| {
            positions[i - 1]
                .iter()
                .zip(&positions[j - 1])
                .map(|(a, b)| (a - b) * (a - b))
                .fold(Rational::zero(), |x, y| x + y)
        })
        .collect()
}

fn random_coordinate(rng: &mut impl Rng) -> Rational {
    let q: i64 = rng.gen_range(1..=100);
    let p: i64 = rng.gen_range(-10 * q..=10 * q);
    Rational::new(p.into(), q.into())
}

/// Random positions in `[−10, 10]^d` with denominators up to 100, redrawn
/// until the full simplex has positive squared volume.
pub fn sample_embedding(cfg: &MassConfig, rng: &mut impl Rng) -> Result<Embedding, VerifyError> {
    if !cfg.in_validity_domain() {
        return Err(VerifyError::Unsupported(format!("d = {} < n - 1 admits no full-dimensional simplex", cfg.d)));
    }
    let vars = VarSet::relative(cfg.n);
    let all: Vec<usize> = (1..=cfg.n).collect();
    for _ in 0..MAX_RETRIES {
        let positions: Vec<Vec<Rational>> = (0..cfg.n).map(|_| (0..cfg.d).map(|_| random_coordinate(rng)).collect()).collect();
        let rho = embed_points(&positions);
        let volume_sq = cayley_menger_value(&all, &vars, &rho);
        if volume_sq.is_positive() {
            return Ok(Embedding { positions, rho, volume_sq });
        }
    }
    Err(VerifyError::DegenerateAfterRetries { retries: MAX_RETRIES })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, trial_rng};

    #[test]
    fn collinear_points_are_flat() {
        let pts = vec![vec![int(0), int(0)], vec![int(1), int(1)], vec![int(3), int(3)]];
        let rho = embed_points(&pts);
        assert_eq!(cayley_menger_value(&[1, 2, 3], &VarSet::relative(3), &rho), int(0));
    }

    #[test]
    fn random_triangles_are_proper() {
        let cfg = MassConfig::equal(3, 2).unwrap();
        let mut rng = trial_rng(5, 0);
        for _ in 0..20 {
            let e = sample_embedding(&cfg, &mut rng).unwrap();
            let (a, b, c) = (&e.rho[0], &e.rho[1], &e.rho[2]);
            // strict triangle inequalities via 16·Area² > 0
            assert!(e.volume_sq > int(0));
            let s = a + b + c;
            assert!(&s * &s > (a * a + b * b + c * c) * int(2));
        }
    }
}
