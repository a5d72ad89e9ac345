use num_traits::Signed;
use serde::Serialize;
use serde_json::json;

use super::{sample_embedding, Report, VerifyError};
use crate::algebra::{int, run_trials, trial_rng, Rational};
use crate::model::{build_delta_rad, MassConfig, PointVolumes};

#[derive(Clone, Debug, Serialize)]
pub struct PositivitySample {
    pub rho: Vec<String>,
    pub minors_positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f2: Option<String>,
    pub f2_nonnegative: bool,
    /// Four bodies: `Ṽ₂² Ṽ₃² ≥ 9 (Σm) V₄²`, i.e. `≥ 36 V₄²` at unit masses.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inequality: Option<bool>,
}

impl PositivitySample {
    fn ok(&self) -> bool {
        self.minors_positive && self.f2_nonnegative && self.inequality.unwrap_or(true)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PositivityReport {
    #[serde(skip)]
    pub cfg: Option<MassConfig>,
    pub trials: usize,
    pub seed: u64,
    /// Whether `F₂` has a closed form for these masses.
    pub f2_checked: bool,
    pub samples: Vec<PositivitySample>,
}

impl PositivityReport {
    pub fn pass(&self) -> bool {
        self.samples.iter().all(PositivitySample::ok)
    }

    pub fn violations(&self) -> usize {
        self.samples.iter().filter(|s| !s.ok()).count()
    }

    pub fn report(&self) -> Report {
        let cfg = self.cfg.as_ref().expect("report built by check_positivity");
        let r = Report::new("positivity", cfg, "points", self.trials, self.seed).with_details(self);
        match self.samples.iter().find(|s| !s.ok()) {
            None => r,
            Some(s) => r.fail(json!(s)),
        }
    }
}

/// At `trials` embedded configurations: all leading principal minors of
/// `g^{μν}` positive, `F₂ ≥ 0` where a closed form exists, and for four
/// bodies `Ṽ₂² Ṽ₃² ≥ 9 (Σm) V₄²`.
pub fn check_positivity(cfg: &MassConfig, trials: usize, seed: u64) -> Result<PositivityReport, VerifyError> {
    let r = build_delta_rad(cfg)?;
    let f2_checked = cfg.n <= 4 || (cfg.n <= 6 && cfg.equal_masses());
    let samples: Vec<Result<PositivitySample, VerifyError>> = run_trials(trials, |t| {
        let mut rng = trial_rng(seed, t);
        let e = sample_embedding(cfg, &mut rng)?;
        let minors_positive = r.g.eval(&e.rho).leading_minors().iter().all(Rational::is_positive);
        let mut sample = PositivitySample {
            rho: super::strings(&e.rho),
            minors_positive,
            f2: None,
            f2_nonnegative: true,
            inequality: None,
        };
        if f2_checked {
            let vols = PointVolumes::at(cfg, &r.vars, &e.rho)?;
            let f2 = vols.f2(cfg)?;
            sample.f2_nonnegative = !f2.is_negative();
            sample.f2 = Some(f2.to_string());
            if cfg.n == 4 {
                let lhs = &vols.tilde[2] * &vols.tilde[3];
                let rhs = int(9) * cfg.total_mass() * &vols.tilde[4];
                sample.inequality = Some(lhs >= rhs);
            }
        }
        Ok(sample)
    });
    let samples = samples.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(PositivityReport {
        cfg: Some(cfg.clone()),
        trials,
        seed,
        f2_checked,
        samples,
    })
}
