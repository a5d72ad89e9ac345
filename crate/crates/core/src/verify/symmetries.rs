use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use super::{Report, VerifyError};
use crate::algebra::{MultiPoly, VarSet};
use crate::model::{build_delta_rad, reference_f2, so3_basis, symmetry_k12, symmetry_l4_symbolic, weighted_volume_sums, MassConfig};
use crate::operators::PolyDiffOp;

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    #[serde(skip)]
    pub cfg: Option<MassConfig>,
    /// `K₁₂` for three bodies, `L(a, b, c)` with symbolic parameters for four.
    pub generator: String,
    pub commutes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutator: Option<String>,
    pub annihilates_f1: bool,
    pub annihilates_f2: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub so3: Option<So3Summary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct So3Summary {
    /// `(a, b, c)` of each basis element `E_i`.
    pub vectors: Vec<Vec<String>>,
    /// `[E₂,E₃] = λ₁E₁` and cyclic.
    pub lambdas: Vec<String>,
    /// `J_i = s_i E_i`, with `s_i²` listed here.
    pub scale_squares: Vec<String>,
    pub killing_negative_definite: bool,
}

impl SymmetryReport {
    pub fn pass(&self) -> bool {
        let so3_ok = self.so3.as_ref().is_none_or(|s| s.killing_negative_definite);
        self.commutes && so3_ok && self.annihilates_f1 && self.annihilates_f2
    }

    pub fn report(&self) -> Report {
        let cfg = self.cfg.as_ref().expect("report built by check_symmetries");
        let r = Report::new("symmetries", cfg, "symbolic", 0, 0).with_details(self);
        if self.pass() {
            r
        } else {
            r.fail(json!({ "commutator": self.commutator, "annihilates_f1": self.annihilates_f1, "annihilates_f2": self.annihilates_f2 }))
        }
    }
}

fn annihilates(op: &PolyDiffOp, f: &MultiPoly, vars: &Arc<VarSet>) -> Result<bool, VerifyError> {
    Ok(op.apply(&f.remap(vars)?).is_zero())
}

/// Three bodies: `[Δ_rad, K₁₂] = 0` and `K₁₂ F₁ = K₁₂ F₂ = 0` for the given
/// masses. Four bodies with unit masses: `[Δ_rad, L(a, b, c)] = 0` with
/// `a, b, c` symbolic, `L F₁ = L F₂ = 0`, and a rational Killing-orthogonal
/// basis closing into `so(3)`.
pub fn check_symmetries(cfg: &MassConfig) -> Result<SymmetryReport, VerifyError> {
    let r = build_delta_rad(cfg)?;
    let vols = weighted_volume_sums(cfg)?;
    let f1 = &vols.f1;
    let f2 = reference_f2(cfg, &vols)?;
    match cfg.n {
        3 => {
            let k = symmetry_k12(&cfg.masses);
            let br = r.op.commutator(&k)?;
            Ok(SymmetryReport {
                cfg: Some(cfg.clone()),
                generator: k.to_text(),
                commutes: br.is_zero(),
                commutator: (!br.is_zero()).then(|| br.to_text()),
                annihilates_f1: annihilates(&k, f1, &r.vars)?,
                annihilates_f2: annihilates(&k, &f2, &r.vars)?,
                so3: None,
            })
        }
        4 if cfg.equal_masses() && cfg.masses[0] == crate::algebra::int(1) => {
            let l = symmetry_l4_symbolic();
            let vars = l.vars().clone();
            let op = r.op.remap(&vars)?;
            let br = op.commutator(&l)?;
            let basis = so3_basis()?;
            Ok(SymmetryReport {
                cfg: Some(cfg.clone()),
                generator: l.to_text(),
                commutes: br.is_zero(),
                commutator: (!br.is_zero()).then(|| br.to_text()),
                annihilates_f1: annihilates(&l, f1, &vars)?,
                annihilates_f2: annihilates(&l, &f2, &vars)?,
                so3: Some(So3Summary {
                    vectors: basis.vectors.iter().map(super::strings).collect(),
                    lambdas: super::strings(&basis.lambdas),
                    scale_squares: super::strings(&basis.scale_squares),
                    killing_negative_definite: basis.compact,
                }),
            })
        }
        _ => Err(VerifyError::Unsupported("symmetry generators are known for n = 3 and for n = 4 with unit masses".into())),
    }
}
