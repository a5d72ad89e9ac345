use serde::Serialize;
use serde_json::json;

use super::{Report, VerifyError};
use crate::model::{build_delta_rad, sl_decomposition, MassConfig, ModelError};
use crate::spectral::{operator_matrix, MonomialBasis};

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    #[serde(skip)]
    pub cfg: Option<MassConfig>,
    pub words: usize,
    pub decomposition: String,
    pub round_trip: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
    #[serde(rename = "N")]
    pub max_degree: u32,
    pub basis_size: usize,
    pub lowers_degree: bool,
    pub strictly_triangular: bool,
    /// `Δ_rad^{N+1}` vanishes on `P_N`.
    pub nilpotent: bool,
}

impl DecompositionReport {
    pub fn pass(&self) -> bool {
        self.round_trip && self.lowers_degree && self.strictly_triangular && self.nilpotent
    }

    pub fn report(&self) -> Report {
        let cfg = self.cfg.as_ref().expect("report built by check_sl_decomposition");
        let r = Report::new("sl-decomposition", cfg, "symbolic", 0, 0).with_details(self);
        if self.pass() {
            r
        } else {
            r.fail(json!({ "mismatch": self.mismatch, "lowers_degree": self.lowers_degree, "nilpotent": self.nilpotent }))
        }
    }
}

/// Writes `Δ_rad` in the generators `J⁻_k = ∂_k`, `J⁰_ij = ρ_i ∂_j`,
/// expands the words back, and checks the action on `P_N`.
pub fn check_sl_decomposition(cfg: &MassConfig, max_degree: u32) -> Result<DecompositionReport, VerifyError> {
    let r = build_delta_rad(cfg)?;
    let (words, decomposition, round_trip, mismatch) = match sl_decomposition(&r) {
        Ok(dec) => (dec.words.len(), dec.to_text(&r.vars), true, None),
        Err(ModelError::DecompositionFailed(diff)) => (0, String::new(), false, Some(diff)),
        Err(e) => return Err(e.into()),
    };
    let basis = MonomialBasis::new(r.vars.len(), max_degree);
    let mat = operator_matrix(&r.op, &basis).map_err(|e| VerifyError::Violated {
        check: "sl-decomposition".into(),
        witness: e.to_string(),
    })?;
    Ok(DecompositionReport {
        cfg: Some(cfg.clone()),
        words,
        decomposition,
        round_trip,
        mismatch,
        max_degree,
        basis_size: basis.len(),
        lowers_degree: mat.lowers_degree(&basis),
        strictly_triangular: mat.is_strictly_upper_triangular(),
        nilpotent: mat.power_vanishes(max_degree + 1),
    })
}
