use num_traits::{One, Zero};
use rand::Rng;

use super::MassConfig;
use crate::algebra::Rational;

/// Row `√scale_sq · Σ_k coeffs[k] r_k` of the Jacobi transform.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiRow {
    pub scale_sq: Rational,
    pub coeffs: Vec<Rational>,
}

/// Relative Jacobi vectors
/// `√(m_{j+1}M_j/M_{j+1}) (r_{j+1} − Σ_{k≤j} m_k r_k / M_j)` and the
/// centre-of-mass row `Σ m_k r_k` with squared scale `1/M_n`.
#[derive(Clone, Debug)]
pub struct JacobiMap {
    pub rows: Vec<JacobiRow>,
    pub centre_of_mass: JacobiRow,
    pub inverse_masses: Vec<Rational>,
}

pub fn jacobi_map(cfg: &MassConfig) -> JacobiMap {
    let n = cfg.n;
    let m = &cfg.masses;
    let mut rows = Vec::with_capacity(n - 1);
    let mut partial = Rational::zero();
    for j in 1..n {
        partial += &m[j - 1];
        let next = &partial + &m[j];
        let mut coeffs = vec![Rational::zero(); n];
        for k in 0..j {
            coeffs[k] = -(&m[k] / &partial);
        }
        coeffs[j] = Rational::one();
        rows.push(JacobiRow {
            scale_sq: &m[j] * &partial / &next,
            coeffs,
        });
    }
    JacobiMap {
        rows,
        centre_of_mass: JacobiRow {
            scale_sq: cfg.total_mass().recip(),
            coeffs: m.clone(),
        },
        inverse_masses: cfg.inverse_masses(),
    }
}

impl JacobiMap {
    fn all_rows(&self) -> Vec<&JacobiRow> {
        self.rows.iter().chain(std::iter::once(&self.centre_of_mass)).collect()
    }

    /// Checks `Σ_i c_ai c_bi / m_i = δ_ab / s_a` for every pair of rows,
    /// which makes `Σ (1/m_i) Δ_i` diagonal in the new coordinates.
    pub fn is_diagonalizing(&self) -> bool {
        let rows = self.all_rows();
        rows.iter().enumerate().all(|(a, ra)| {
            rows.iter().enumerate().all(|(b, rb)| {
                let s: Rational = (0..ra.coeffs.len())
                    .map(|i| &ra.coeffs[i] * &rb.coeffs[i] * &self.inverse_masses[i])
                    .fold(Rational::zero(), |x, y| x + y);
                if a == b {
                    s * &ra.scale_sq == Rational::one()
                } else {
                    s.is_zero()
                }
            })
        })
    }

    /// Draws momenta `q_a = √s_a t_a` in the new coordinates with rational
    /// `t_a ∈ Q^dim`, maps them back to particle momenta
    /// `p_i = Σ_a s_a c_ai t_a` and returns both sides of
    /// `Σ |p_i|²/m_i = Σ_a |q_a|²`.
    pub fn kinetic_sides(&self, dim: usize, rng: &mut impl Rng) -> (Rational, Rational) {
        let rows = self.all_rows();
        let n = self.inverse_masses.len();
        let t: Vec<Vec<Rational>> = rows
            .iter()
            .map(|_| (0..dim).map(|_| Rational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=20).into())).collect())
            .collect();
        let mut lhs = Rational::zero();
        for i in 0..n {
            for s in 0..dim {
                let p: Rational = rows
                    .iter()
                    .zip(&t)
                    .map(|(r, ta)| &r.scale_sq * &r.coeffs[i] * &ta[s])
                    .fold(Rational::zero(), |x, y| x + y);
                lhs += &p * &p * &self.inverse_masses[i];
            }
        }
        let rhs = rows
            .iter()
            .zip(&t)
            .map(|(r, ta)| ta.iter().map(|v| v * v).fold(Rational::zero(), |x, y| x + y) * &r.scale_sq)
            .fold(Rational::zero(), |x, y| x + y);
        (lhs, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{frac, int};

    #[test]
    fn three_body_rows() {
        let cfg = MassConfig::equal(3, 2).unwrap();
        let j = jacobi_map(&cfg);
        assert_eq!(j.rows[0].scale_sq, frac(1, 2));
        assert_eq!(j.rows[0].coeffs, vec![int(-1), int(1), int(0)]);
        // √(2/3)·(−1/2, −1/2, 1)
        assert_eq!(j.rows[1].scale_sq, frac(2, 3));
        assert_eq!(j.rows[1].coeffs, vec![frac(-1, 2), frac(-1, 2), int(1)]);
        assert!(j.is_diagonalizing());
    }
}
