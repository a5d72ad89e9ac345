use serde::Serialize;
use serde_json::json;

use super::{Report, VerifyError};
use crate::algebra::{false_accept_log10, poly_det_budgeted, random_rational_point, run_trials, trial_rng, AlgebraError, Rational};
use crate::model::{build_delta_rad, reference_f2, weighted_volume_sums, MassConfig, PointVolumes};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Points,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Points => "points",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointRecord {
    pub point: Vec<String>,
    pub det: String,
    pub product: String,
    pub equal: bool,
}

/// Outcome of testing `det g = c_n F₁ F₂`.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    #[serde(skip)]
    pub cfg: Option<MassConfig>,
    pub mode: Mode,
    pub c_n: String,
    /// `det g / (c_n F₁)` in symbolic mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remainder: Option<String>,
    pub matched_reference: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<PointRecord>,
    pub trials: usize,
    pub seed: u64,
    pub bound: u64,
    /// `log10` of the false-accept probability of the point test.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub false_accept_log10: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl FactorizationReport {
    pub fn pass(&self) -> bool {
        self.matched_reference && self.remainder.is_none() && self.points.iter().all(|p| p.equal)
    }

    pub fn report(&self) -> Report {
        let cfg = self.cfg.as_ref().expect("report built by check_conjecture2");
        let r = Report::new("conjecture2", cfg, self.mode.as_str(), self.trials, self.seed).with_details(self);
        if self.pass() {
            return r;
        }
        let witness = if let Some(rem) = &self.remainder {
            json!({ "remainder": rem })
        } else if let Some(p) = self.points.iter().find(|p| !p.equal) {
            serde_json::to_value(p).expect("point record serializes")
        } else {
            json!({ "quotient": self.quotient })
        };
        r.fail(witness)
    }
}

/// Checks `det g^{μν} = c_n(m) F₁ F₂` either as a polynomial identity
/// (`n ≤ 4`) or at `trials` random points with coordinates `p/q`,
/// `1 ≤ p, q ≤ bound`.
pub fn check_conjecture2(cfg: &MassConfig, mode: Mode, trials: usize, seed: u64, bound: u64) -> Result<FactorizationReport, VerifyError> {
    if cfg.n > 6 {
        return Err(VerifyError::Unsupported(format!("n = {} has no closed-form second factor", cfg.n)));
    }
    match mode {
        Mode::Symbolic => {
            if cfg.n > 4 {
                return Err(VerifyError::Unsupported("symbolic mode is limited to n <= 4".into()));
            }
            symbolic(cfg, trials, seed, bound)
        }
        Mode::Points => points(cfg, trials, seed, bound, None),
    }
}

fn symbolic(cfg: &MassConfig, trials: usize, seed: u64, bound: u64) -> Result<FactorizationReport, VerifyError> {
    let r = build_delta_rad(cfg)?;
    let vols = weighted_volume_sums(cfg)?;
    let det = match poly_det_budgeted(&r.g, crate::algebra::DEFAULT_TERM_BUDGET) {
        Ok(det) => det,
        Err(AlgebraError::BudgetExceeded { budget }) => {
            let warning = format!("symbolic determinant exceeded {budget} terms; fell back to the point test");
            return points(cfg, trials, seed, bound, Some(warning));
        }
        Err(e) => return Err(e.into()),
    };
    let reference = reference_f2(cfg, &vols)?;
    let divisor = vols.f1.scale(&vols.c_n);
    let mut report = FactorizationReport {
        cfg: Some(cfg.clone()),
        mode: Mode::Symbolic,
        c_n: vols.c_n.to_string(),
        quotient: None,
        remainder: None,
        matched_reference: false,
        points: Vec::new(),
        trials: 0,
        seed,
        bound,
        false_accept_log10: None,
        warning: None,
    };
    match det.div_exact(&divisor) {
        Ok(q) => {
            report.matched_reference = q == reference;
            report.quotient = Some(q.to_string());
        }
        Err(AlgebraError::NotDivisible { remainder }) => report.remainder = Some(remainder),
        Err(e) => return Err(e.into()),
    }
    Ok(report)
}

fn points(cfg: &MassConfig, trials: usize, seed: u64, bound: u64, warning: Option<String>) -> Result<FactorizationReport, VerifyError> {
    let r = build_delta_rad(cfg)?;
    let c_n = crate::model::mass_constant(cfg);
    let vars = r.vars.clone();
    let records: Vec<Result<PointRecord, VerifyError>> = run_trials(trials, |t| {
        let mut rng = trial_rng(seed, t);
        let point = random_rational_point(&vars, &mut rng, bound);
        let det = r.g.eval(&point).det();
        let vols = PointVolumes::at(cfg, &vars, &point)?;
        let product: Rational = &c_n * &vols.f1 * vols.f2(cfg)?;
        Ok(PointRecord {
            point: super::strings(&point),
            equal: det == product,
            det: det.to_string(),
            product: product.to_string(),
        })
    });
    let points = records.into_iter().collect::<Result<Vec<_>, _>>()?;
    // det g has total degree M
    let degree = cfg.pair_count() as u32;
    Ok(FactorizationReport {
        cfg: Some(cfg.clone()),
        mode: Mode::Points,
        c_n: c_n.to_string(),
        quotient: None,
        remainder: None,
        matched_reference: points.iter().all(|p| p.equal),
        points,
        trials,
        seed,
        bound,
        false_accept_log10: Some(false_accept_log10(degree, bound, trials)),
        warning,
    })
}
