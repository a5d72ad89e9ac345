use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Rational, VarSet};

pub const DEFAULT_BOUND: u64 = 1_000_000;
pub const DEFAULT_TRIALS: usize = 100;

/// Independent, reproducible stream for one trial of a seeded run.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// One rational per variable, numerator and denominator each uniform on
/// `[1, bound]`.
///
/// Failure bound: conditioned on the denominators, each coordinate is
/// uniform over `bound` distinct values, so a nonzero polynomial of total
/// degree `D` vanishes with probability at most `D / bound` per point.
pub fn random_rational_point(vars: &VarSet, rng: &mut impl Rng, bound: u64) -> Vec<Rational> {
    assert!(bound >= 2, "bound must be at least 2");
    (0..vars.len())
        .map(|_| {
            let p = rng.gen_range(1..=bound);
            let q = rng.gen_range(1..=bound);
            Rational::new(BigInt::from(p), BigInt::from(q))
        })
        .collect()
}

pub fn random_assignment(vars: &VarSet, seed: u64, bound: u64) -> BTreeMap<String, Rational> {
    let mut rng = trial_rng(seed, 0);
    vars.names()
        .iter()
        .cloned()
        .zip(random_rational_point(vars, &mut rng, bound))
        .collect()
}

/// `log10` of the probability that `trials` independent points all miss a
/// nonzero polynomial of total degree `degree`.
pub fn false_accept_log10(degree: u32, bound: u64, trials: usize) -> f64 {
    if degree == 0 {
        return f64::NEG_INFINITY;
    }
    trials as f64 * ((degree as f64).log10() - (bound as f64).log10())
}

/// Runs `f` on trial indices `0..trials` in parallel; results come back in
/// trial order.
pub fn run_trials<T: Send>(trials: usize, f: impl Fn(u64) -> T + Sync + Send) -> Vec<T> {
    (0..trials as u64).into_par_iter().map(f).collect()
}
