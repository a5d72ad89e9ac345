use serde::Serialize;
use serde_json::Value;

use super::VerifyError;
use crate::model::MassConfig;

/// Common envelope written for every check.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    pub masses: Vec<String>,
    pub d: i64,
    pub mode: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub trials: usize,
    pub seed: u64,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(check: &str, cfg: &MassConfig, mode: &str, trials: usize, seed: u64) -> Self {
        Report {
            check: check.to_string(),
            n: cfg.n,
            masses: super::strings(&cfg.masses),
            d: cfg.d,
            mode: mode.to_string(),
            pass: true,
            witness: None,
            trials,
            seed,
            details: Value::Null,
            elapsed_ms: None,
        }
    }

    pub fn with_details(mut self, details: &impl Serialize) -> Self {
        self.details = serde_json::to_value(details).expect("report details serialize");
        self
    }

    pub fn fail(mut self, witness: Value) -> Self {
        self.pass = false;
        self.witness = Some(witness);
        self
    }

    /// Turns a failing report into [`VerifyError::Violated`].
    pub fn into_result(self) -> Result<Report, VerifyError> {
        if self.pass {
            Ok(self)
        } else {
            Err(VerifyError::Violated {
                check: self.check.clone(),
                witness: self.witness.map(|w| w.to_string()).unwrap_or_default(),
            })
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
