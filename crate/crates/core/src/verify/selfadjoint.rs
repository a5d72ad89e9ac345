use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use super::{Mode, Report, VerifyError};
use crate::algebra::{int, random_rational_point, run_trials, trial_rng, MultiPoly, Rational, VarSet};
use crate::model::{build_delta_rad, cayley_menger_gradient, cayley_menger_sq, cayley_menger_value, MassConfig};

#[derive(Clone, Debug, Serialize)]
pub struct SelfAdjointReport {
    #[serde(skip)]
    pub cfg: Option<MassConfig>,
    pub mode: Mode,
    /// Symbolic mode treats `d` as a variable.
    pub symbolic_in_d: bool,
    /// Nonzero residuals `2 b^ν F₁ − 2 (∂_μ g^{μν}) F₁ − (d − n) g^{μν} ∂_μ F₁`.
    pub residuals: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failing_points: Vec<Vec<String>>,
    pub trials: usize,
    pub seed: u64,
}

impl SelfAdjointReport {
    pub fn pass(&self) -> bool {
        self.residuals.is_empty() && self.failing_points.is_empty()
    }

    pub fn report(&self) -> Report {
        let cfg = self.cfg.as_ref().expect("report built by check_selfadjoint");
        let r = Report::new("selfadjoint", cfg, self.mode.as_str(), self.trials, self.seed).with_details(self);
        if self.pass() {
            r
        } else {
            r.fail(json!({ "residuals": self.residuals, "points": self.failing_points }))
        }
    }
}

/// Verifies `b^ν F₁ = (∂_μ g^{μν}) F₁ + ((d−n)/2) g^{μν} ∂_μ F₁` for every
/// `ν`, i.e. `Δ_rad = w⁻¹ ∂_μ (w g^{μν} ∂_ν)` with `w = F₁^{(d−n)/2}`.
/// Symbolic mode (`n ≤ 4`) keeps `d` as a polynomial variable; point mode
/// uses the configured `d`.
pub fn check_selfadjoint(cfg: &MassConfig, mode: Mode, trials: usize, seed: u64, bound: u64) -> Result<SelfAdjointReport, VerifyError> {
    let r = build_delta_rad(cfg)?;
    let n = cfg.n;
    let m = r.vars.len();
    let kappa: Vec<Rational> = crate::algebra::pairs(n)
        .into_iter()
        .map(|(i, j)| &r.inverse_masses[i - 1] + &r.inverse_masses[j - 1])
        .collect();
    let divergence: Vec<MultiPoly> = (0..m)
        .map(|nu| (0..m).fold(MultiPoly::zero(&r.vars), |acc, mu| acc + r.g.get(mu, nu).derivative(mu)))
        .collect();
    let mut report = SelfAdjointReport {
        cfg: Some(cfg.clone()),
        mode,
        symbolic_in_d: mode == Mode::Symbolic,
        residuals: Vec::new(),
        failing_points: Vec::new(),
        trials: 0,
        seed,
    };
    match mode {
        Mode::Symbolic => {
            if n > 4 {
                return Err(VerifyError::Unsupported("symbolic measure check is limited to n <= 4".into()));
            }
            let ext = Arc::new(r.vars.with_extra(&["d"])?);
            let d = MultiPoly::var_named(&ext, "d")?;
            let all: Vec<usize> = (1..=n).collect();
            let f1 = cayley_menger_sq(&all, &r.vars).remap(&ext)?;
            let grad: Vec<MultiPoly> = (0..m).map(|mu| f1.derivative(mu)).collect();
            let d_minus_n = &d - &MultiPoly::constant(&ext, int(n as i64));
            for nu in 0..m {
                let b = d.scale(&kappa[nu]);
                let div = divergence[nu].remap(&ext)?;
                let mut contraction = MultiPoly::zero(&ext);
                for mu in 0..m {
                    contraction += &(&r.g.get(mu, nu).remap(&ext)? * &grad[mu]);
                }
                let residual = (&(&b - &div) * &f1).scale(&int(2)) - &d_minus_n * &contraction;
                if !residual.is_zero() {
                    report.residuals.push(residual.to_string());
                }
            }
        }
        Mode::Points => {
            let vars: Arc<VarSet> = r.vars.clone();
            let all: Vec<usize> = (1..=n).collect();
            let d = int(cfg.d);
            let failing: Vec<Option<Vec<String>>> = run_trials(trials, |t| {
                let p = random_rational_point(&vars, &mut trial_rng(seed, t), bound);
                let f1 = cayley_menger_value(&all, &vars, &p);
                let grad = cayley_menger_gradient(n, &vars, &p);
                let g = r.g.eval(&p);
                let ok = (0..m).all(|nu| {
                    let lhs = &d * &kappa[nu] * &f1;
                    let div = divergence[nu].eval(&p) * &f1;
                    let contraction = (0..m).fold(Rational::from_integer(0.into()), |acc, mu| acc + g.get(mu, nu) * &grad[mu]);
                    lhs * int(2) == div * int(2) + (&d - int(n as i64)) * contraction
                });
                (!ok).then(|| super::strings(&p))
            });
            report.failing_points = failing.into_iter().flatten().collect();
            report.trials = trials;
        }
    }
    Ok(report)
}
