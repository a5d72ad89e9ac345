use num_traits::{Signed, Zero};

use super::{build_from_inverse_masses, RadialOperator};
use crate::algebra::{int, Rational};

/// Limit of the operator as the masses of the `frozen` particles (1-based)
/// go to infinity. Every coefficient is affine in the inverse masses, so
/// the limit sets those inverse masses to zero.
pub fn frozen_mass_limit(r: &RadialOperator, frozen: &[usize]) -> RadialOperator {
    let mut w = r.inverse_masses.clone();
    for &q in frozen {
        assert!((1..=r.n).contains(&q), "particle {q} out of range");
        w[q - 1] = Rational::zero();
    }
    build_from_inverse_masses(r.n, &w, r.d)
}

/// Distance of the operator at `m_frozen = 10^t` from the frozen limit.
#[derive(Clone, Debug)]
pub struct LimitStep {
    pub t: u32,
    /// Largest absolute difference over all coefficients of all terms.
    pub max_deviation: Rational,
}

/// Evaluates the operator with the frozen masses set to `10^t` for each
/// `t` and measures the distance to the limit operator.
pub fn limit_convergence(r: &RadialOperator, frozen: &[usize], ts: &[u32]) -> Vec<LimitStep> {
    let target = frozen_mass_limit(r, frozen);
    ts.iter()
        .map(|&t| {
            let mut w = r.inverse_masses.clone();
            let big = Rational::from_integer(num_bigint::BigInt::from(10).pow(t));
            for &q in frozen {
                w[q - 1] = big.recip();
            }
            let approx = build_from_inverse_masses(r.n, &w, r.d);
            let diff = approx.op - target.op.clone();
            let max_deviation = diff
                .terms()
                .flat_map(|(_, c)| c.terms().map(|(_, v)| v.abs()).collect::<Vec<_>>())
                .fold(int(0), |a, b| if b > a { b } else { a });
            LimitStep { t, max_deviation }
        })
        .collect()
}
