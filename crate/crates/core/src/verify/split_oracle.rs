use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;
use serde_json::json;

use super::{sample_embedding, Report, VerifyError};
use crate::algebra::{int, pairs, run_trials, trial_rng, Monomial, MultiPoly, Rational, VarSet};
use crate::model::{build_delta_rad, MassConfig};
use crate::operators::PolyDiffOp;

/// Truncated power series `a₀ + a₁t + a₂t²`.
#[derive(Clone, Debug)]
struct Jet([Rational; 3]);

impl Jet {
    fn constant(c: Rational) -> Self {
        Jet([c, Rational::zero(), Rational::zero()])
    }

    fn mul(&self, o: &Jet) -> Jet {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &o.0;
        Jet([a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a1 * b1 + a2 * b0])
    }
}

fn eval_jet(f: &MultiPoly, jets: &[Jet]) -> Jet {
    let mut acc = Jet::constant(Rational::zero());
    for (mono, c) in f.terms() {
        let mut term = Jet::constant(c.clone());
        for (k, &e) in mono.exponents().iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&jets[k]);
            }
        }
        for (a, b) in acc.0.iter_mut().zip(term.0) {
            *a += b;
        }
    }
    acc
}

/// `Σ_i (1/(2 m_i)) Δ_i [F(ρ(x))]`, each second derivative read off as twice
/// the `t²` coefficient of `F(ρ(x + t e_{is}))`.
fn cartesian_side(f: &MultiPoly, inverse_masses: &[Rational], positions: &[Vec<Rational>], rho: &[Rational]) -> Rational {
    let n = positions.len();
    let pr = pairs(n);
    let mut total = Rational::zero();
    for i in 1..=n {
        if inverse_masses[i - 1].is_zero() {
            continue;
        }
        let mut lap = Rational::zero();
        for s in 0..positions[i - 1].len() {
            let jets: Vec<Jet> = pr
                .iter()
                .zip(rho)
                .map(|(&(a, b), r)| {
                    let other = match (a == i, b == i) {
                        (true, _) => Some(b),
                        (_, true) => Some(a),
                        _ => None,
                    };
                    match other {
                        Some(o) => {
                            let delta = &positions[i - 1][s] - &positions[o - 1][s];
                            Jet([r.clone(), delta * int(2), int(1)])
                        }
                        None => Jet::constant(r.clone()),
                    }
                })
                .collect();
            let [_, _, c2] = eval_jet(f, &jets).0;
            lap += c2;
        }
        // (1/(2m)) · 2 c₂ summed over components
        total += lap * &inverse_masses[i - 1];
    }
    total
}

fn random_poly(vars: &Arc<VarSet>, max_degree: u32, rng: &mut impl Rng) -> MultiPoly {
    let m = vars.len();
    let mut f = MultiPoly::zero(vars);
    let mut exps = vec![0u16; m];
    fn walk(k: usize, left: u32, exps: &mut Vec<u16>, f: &mut MultiPoly, rng: &mut impl Rng) {
        if k == exps.len() {
            let c: i64 = rng.gen_range(1..=9);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            f.add_term(Monomial::from_exponents(exps), int(sign * c));
            return;
        }
        for e in 0..=left {
            exps[k] = e as u16;
            walk(k + 1, left - e, exps, f, rng);
        }
        exps[k] = 0;
    }
    walk(0, max_degree, &mut exps, &mut f, rng);
    f
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleTrial {
    pub trial: u64,
    pub positions: Vec<Vec<String>>,
    pub rho: Vec<String>,
    pub polynomial: String,
    pub cartesian: String,
    pub radial: String,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    #[serde(skip)]
    pub cfg: Option<MassConfig>,
    pub max_degree: u32,
    pub trials: Vec<OracleTrial>,
    pub seed: u64,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.trials.iter().all(|t| t.equal)
    }

    pub fn report(&self) -> Report {
        let cfg = self.cfg.as_ref().expect("report built by cartesian_split_oracle");
        let r = Report::new("split-oracle", cfg, "points", self.trials.len(), self.seed).with_details(self);
        match self.trials.iter().find(|t| !t.equal) {
            None => r,
            Some(t) => r.fail(json!(t)),
        }
    }
}

/// One trial of the Cartesian comparison against an arbitrary operator in
/// the pair variables of `cfg`.
pub fn oracle_trial(cfg: &MassConfig, op: &PolyDiffOp, max_degree: u32, seed: u64, trial: u64) -> Result<OracleTrial, VerifyError> {
    let mut rng = trial_rng(seed, trial);
    let e = sample_embedding(cfg, &mut rng)?;
    let f = random_poly(op.vars(), max_degree, &mut rng);
    let cartesian = cartesian_side(&f, &cfg.inverse_masses(), &e.positions, &e.rho);
    let radial = op.apply(&f).eval(&e.rho);
    Ok(OracleTrial {
        trial,
        positions: e.positions.iter().map(super::strings).collect(),
        rho: super::strings(&e.rho),
        polynomial: f.to_string(),
        equal: cartesian == radial,
        cartesian: cartesian.to_string(),
        radial: radial.to_string(),
    })
}

/// Compares `Σ_i (1/(2 m_i)) Δ_i` acting on `F(ρ(x))` with `Δ_rad F`
/// evaluated at `ρ(x)`, for random polynomials `F` of degree at most
/// `max_degree` and random rational configurations `x`.
pub fn cartesian_split_oracle(cfg: &MassConfig, max_degree: u32, trials: usize, seed: u64) -> Result<OracleReport, VerifyError> {
    if max_degree > 3 {
        return Err(VerifyError::Unsupported("max_degree must be at most 3".into()));
    }
    let r = build_delta_rad(cfg)?;
    let results = run_trials(trials, |t| oracle_trial(cfg, &r.op, max_degree, seed, t));
    Ok(OracleReport {
        cfg: Some(cfg.clone()),
        max_degree,
        trials: results.into_iter().collect::<Result<_, _>>()?,
        seed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MutationOutcome {
    /// Derivative pattern whose coefficient was shifted by one.
    pub target: String,
    /// First failing trial, if any within the budget.
    pub caught_at: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MutationReport {
    pub max_trials: usize,
    pub outcomes: Vec<MutationOutcome>,
}

impl MutationReport {
    pub fn pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.caught_at.is_some())
    }
}

/// Adds one to each coefficient of `Δ_rad` in turn, plus a cross term on
/// disjoint pairs and a zeroth-order term, and records how soon the oracle
/// rejects each mutant.
pub fn mutation_control(cfg: &MassConfig, max_degree: u32, max_trials: usize, seed: u64) -> Result<MutationReport, VerifyError> {
    let r = build_delta_rad(cfg)?;
    let m = r.vars.len();
    let mut targets: Vec<Monomial> = r.op.terms().map(|(a, _)| a.clone()).collect();
    if cfg.n >= 4 {
        let (a, b) = (r.vars.pair_index(1, 2).expect("pair"), r.vars.pair_index(3, 4).expect("pair"));
        targets.push(Monomial::var(m, a, 1).mul(&Monomial::var(m, b, 1)));
    }
    targets.push(Monomial::one(m));
    let mut outcomes = Vec::with_capacity(targets.len());
    for alpha in targets {
        let mut mutant = r.op.clone();
        mutant.add_term(alpha.clone(), MultiPoly::one(&r.vars));
        let mut caught_at = None;
        for t in 0..max_trials as u64 {
            if !oracle_trial(cfg, &mutant, max_degree, seed, t)?.equal {
                caught_at = Some(t);
                break;
            }
        }
        let mut target = String::new();
        crate::operators::write_derivative(&mut target, &r.vars, &alpha).expect("string write");
        outcomes.push(MutationOutcome { target, caught_at });
    }
    Ok(MutationReport { max_trials, outcomes })
}
