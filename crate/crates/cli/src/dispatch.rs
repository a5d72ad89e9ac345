use nbody_core::algebra::{poly_det, to_f64, Rational};
use nbody_core::model::{
    build_delta_rad, jacobi_map, limit_convergence, frozen_mass_limit, reference_f2, weighted_volume_sums, MassConfig, ModelError,
};
use nbody_core::spectral::{fd_oracle_n2, gauge_for_omega, harmonic_spectrum, FdOptions, SpectralError};
use nbody_core::verify::{
    cartesian_split_oracle, check_conjecture2, check_conjecture3, check_positivity, check_selfadjoint, check_sl_decomposition,
    check_symmetries, mutation_control, Mode, Report, VerifyError,
};
use serde_json::json;

use crate::args::{BuildKind, LimitKind, SpectrumKind, VerifyKind};
use crate::{CliError, RunConfig, Task};

/// Relative tolerance of the finite-difference comparison.
const FD_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub config: RunConfig,
    /// Plain-text rendering for `--print`.
    pub text: String,
}

impl Outcome {
    pub fn pass(&self) -> bool {
        self.report.pass
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass() {
            0
        } else {
            1
        }
    }

    /// Pretty JSON with the resolved configuration, newline-terminated.
    pub fn to_json(&self, elapsed_ms: Option<u64>) -> String {
        let mut report = self.report.clone();
        report.elapsed_ms = elapsed_ms;
        let mut v = serde_json::to_value(&report).expect("report serializes");
        v["config"] = serde_json::to_value(&self.config).expect("config serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }
}

fn model_err(e: ModelError) -> CliError {
    match e {
        ModelError::InvalidConfig(_) | ModelError::UnsupportedWeighting { .. } | ModelError::UnsupportedCase(_) => {
            CliError::Usage(e.to_string())
        }
        other => CliError::Failed(other.to_string()),
    }
}

fn verify_err(e: VerifyError) -> CliError {
    match e {
        VerifyError::Unsupported(msg) => CliError::Usage(msg),
        VerifyError::Model(m) => model_err(m),
        other => CliError::Failed(other.to_string()),
    }
}

fn spectral_err(e: SpectralError) -> CliError {
    match e {
        SpectralError::InvalidGauge(_) | SpectralError::InvalidGrid(_) | SpectralError::NotTriangular { .. } => {
            CliError::Usage(e.to_string())
        }
        SpectralError::Model(m) => model_err(m),
        other => CliError::Failed(other.to_string()),
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn verdict(report: &Report) -> String {
    let mut s = format!("{}: {}", report.check, if report.pass { "PASS" } else { "FAIL" });
    if let Some(w) = &report.witness {
        s.push_str(&format!("\nwitness: {w}"));
    }
    s
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mc = cfg.mass_config()?;
    let (report, text) = match cfg.task {
        Task::Build(kind) => build(cfg, &mc, kind)?,
        Task::Verify(kind) => {
            let report = verify(cfg, &mc, kind)?;
            let text = verdict(&report);
            (report, text)
        }
        Task::Spectrum(SpectrumKind::Harmonic) => harmonic(cfg, &mc)?,
        Task::Spectrum(SpectrumKind::FdOracle) => fd(cfg, &mc)?,
        Task::Limit(LimitKind::Freeze) => freeze(cfg, &mc)?,
    };
    Ok(Outcome { report, config: cfg.clone(), text })
}

fn build(cfg: &RunConfig, mc: &MassConfig, kind: BuildKind) -> Result<(Report, String), CliError> {
    let name = cfg.task.name();
    let r = build_delta_rad(mc).map_err(model_err)?;
    let base = Report::new(&name, mc, "symbolic", 0, cfg.seed);
    Ok(match kind {
        BuildKind::DeltaRad => {
            let text = r.op.to_text();
            let details = json!({
                "variables": r.vars.names(),
                "terms": r.op.num_terms(),
                "operator": text.lines().collect::<Vec<_>>(),
                "validity_domain": mc.in_validity_domain(),
            });
            (base.with_details(&details), text)
        }
        BuildKind::Metric => {
            let m = r.vars.len();
            let mut entries = Vec::new();
            let mut lines = Vec::new();
            for mu in 0..m {
                for nu in mu..m {
                    let e = r.g.get(mu, nu);
                    lines.push(format!("g[{}, {}] = {}", r.vars.name(mu), r.vars.name(nu), e));
                    entries.push(json!({ "row": r.vars.name(mu), "col": r.vars.name(nu), "entry": e.to_string() }));
                }
            }
            for mu in 0..m {
                lines.push(format!("b[{}] = {}", r.vars.name(mu), r.b[mu]));
            }
            let det = (mc.n <= 4).then(|| poly_det(&r.g).to_string());
            if let Some(det) = &det {
                lines.push(format!("det = {det}"));
            }
            let details = json!({ "g": entries, "b": strings(&r.b), "det": det });
            (base.with_details(&details), lines.join("\n"))
        }
        BuildKind::Volumes => {
            let vols = weighted_volume_sums(mc).map_err(model_err)?;
            let f2 = reference_f2(mc, &vols).ok().map(|p| p.to_string());
            let tilde: Vec<String> = vols.tilde.iter().map(ToString::to_string).collect();
            let mut lines: Vec<String> = tilde.iter().enumerate().skip(2).map(|(k, t)| format!("V~{k} = {t}")).collect();
            lines.push(format!("F1 = {}", vols.f1));
            lines.push(format!("c_n = {}", vols.c_n));
            if let Some(f2) = &f2 {
                lines.push(format!("F2 = {f2}"));
            }
            let details = json!({ "tilde": tilde, "f1": vols.f1.to_string(), "c_n": vols.c_n.to_string(), "f2": f2 });
            (base.with_details(&details), lines.join("\n"))
        }
        BuildKind::Jacobi => {
            let map = jacobi_map(mc);
            let row = |r: &nbody_core::model::JacobiRow| json!({ "scale_sq": r.scale_sq.to_string(), "coeffs": strings(&r.coeffs) });
            let diagonal = map.is_diagonalizing();
            let details = json!({
                "rows": map.rows.iter().map(row).collect::<Vec<_>>(),
                "centre_of_mass": row(&map.centre_of_mass),
                "diagonalizing": diagonal,
            });
            let mut lines: Vec<String> = map
                .rows
                .iter()
                .enumerate()
                .map(|(k, r)| format!("y{} = sqrt({}) * ({})", k + 1, r.scale_sq, strings(&r.coeffs).join(", ")))
                .collect();
            lines.push(format!("diagonalizing: {diagonal}"));
            let report = if diagonal { base.with_details(&details) } else { base.with_details(&details).fail(json!("kinetic form not diagonal")) };
            (report, lines.join("\n"))
        }
    })
}

fn verify(cfg: &RunConfig, mc: &MassConfig, kind: VerifyKind) -> Result<Report, CliError> {
    let mode = cfg.mode.unwrap_or(Mode::Points);
    Ok(match kind {
        VerifyKind::Conjecture2 => check_conjecture2(mc, mode, cfg.trials, cfg.seed, cfg.bound).map_err(verify_err)?.report(),
        VerifyKind::Conjecture3 => check_conjecture3(mc, cfg.seed).map_err(verify_err)?.report(cfg.seed),
        VerifyKind::SplitOracle => {
            let rep = cartesian_split_oracle(mc, cfg.max_degree, cfg.trials, cfg.seed).map_err(verify_err)?;
            let mutation = mutation_control(mc, cfg.max_degree.max(2), 5, cfg.seed).map_err(verify_err)?;
            let mut report = rep.report();
            report.details["mutation"] = serde_json::to_value(&mutation).expect("mutation report serializes");
            if report.pass && !mutation.pass() {
                let missed: Vec<&String> = mutation.outcomes.iter().filter(|o| o.caught_at.is_none()).map(|o| &o.target).collect();
                report = report.fail(json!({ "uncaught_mutants": missed }));
            }
            report
        }
        VerifyKind::Selfadjoint => check_selfadjoint(mc, mode, cfg.trials, cfg.seed, cfg.bound).map_err(verify_err)?.report(),
        VerifyKind::Positivity => check_positivity(mc, cfg.trials, cfg.seed).map_err(verify_err)?.report(),
        VerifyKind::Symmetries => check_symmetries(mc).map_err(verify_err)?.report(),
        VerifyKind::SlDecomposition => check_sl_decomposition(mc, cfg.max_degree).map_err(verify_err)?.report(),
    })
}

fn harmonic(cfg: &RunConfig, mc: &MassConfig) -> Result<(Report, String), CliError> {
    let pairs = mc.pair_count();
    let a = match (cfg.gauge()?, cfg.omega()?) {
        (Some(a), _) if a.len() == 1 => vec![a[0].clone(); pairs],
        (Some(a), _) => a,
        (None, Some(w)) => vec![gauge_for_omega(mc, &w).map_err(spectral_err)?],
        (None, None) => return Err(CliError::Usage("spectrum harmonic needs --a or, for two bodies, --omega".into())),
    };
    let spec = harmonic_spectrum(mc, &a, cfg.max_degree).map_err(spectral_err)?;
    let mut report = Report::new(&cfg.task.name(), mc, "exact", 0, cfg.seed).with_details(&spec);
    if !spec.diagonal_nonnegative {
        report = report.fail(json!("negative diagonal entry"));
    }
    let text = spec
        .eigenvalues
        .iter()
        .zip(&spec.multiplicities)
        .map(|(e, k)| format!("{e} x{k}"))
        .collect::<Vec<_>>()
        .join("\n");
    Ok((report, text))
}

fn fd(cfg: &RunConfig, mc: &MassConfig) -> Result<(Report, String), CliError> {
    if mc.n != 2 {
        return Err(CliError::Usage("fd-oracle is for two bodies".into()));
    }
    let masses: Vec<f64> = mc.masses.iter().map(to_f64).collect();
    let omega = to_f64(&cfg.omega_or_one()?);
    let d = u32::try_from(mc.d).map_err(|_| CliError::Usage("d must be positive".into()))?;
    let res = fd_oracle_n2(&masses, d, omega, cfg.k_max, &FdOptions::default()).map_err(spectral_err)?;
    let kappa: f64 = masses.iter().map(|m| 1.0 / m).sum();
    let exact: Vec<f64> = (0..cfg.k_max).map(|k| (2.0 * omega * kappa).sqrt() * (2.0 * k as f64 + d as f64 / 2.0)).collect();
    let errors: Vec<f64> = res.eigenvalues.iter().zip(&exact).map(|(x, e)| ((x - e) / e).abs()).collect();
    let worst = errors.iter().cloned().fold(0.0, f64::max);
    let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.9e}")).collect::<Vec<_>>();
    let details = json!({
        "omega": cfg.omega_or_one()?.to_string(),
        "eigenvalues": fmt(&res.eigenvalues),
        "analytic": fmt(&exact),
        "max_relative_error": format!("{worst:.2e}"),
        "tolerance": format!("{FD_TOLERANCE:e}"),
        "rho_max": format!("{:.6e}", res.rho_max),
    });
    let mut report = Report::new(&cfg.task.name(), mc, "finite-difference", 0, cfg.seed).with_details(&details);
    if !(worst <= FD_TOLERANCE) {
        report = report.fail(json!({ "max_relative_error": format!("{worst:.2e}") }));
    }
    let text = fmt(&res.eigenvalues).join("\n");
    Ok((report, text))
}

fn freeze(cfg: &RunConfig, mc: &MassConfig) -> Result<(Report, String), CliError> {
    let frozen = if cfg.frozen.is_empty() { vec![1] } else { cfg.frozen.clone() };
    let r = build_delta_rad(mc).map_err(model_err)?;
    let limit = frozen_mass_limit(&r, &frozen);
    let ts = [3u32, 6, 9];
    let steps = limit_convergence(&r, &frozen, &ts);
    let decreasing = steps.windows(2).all(|w| w[1].max_deviation < w[0].max_deviation);
    let text = limit.op.to_text();
    let details = json!({
        "frozen": frozen,
        "operator": text.lines().collect::<Vec<_>>(),
        "deviation": steps.iter().map(|s| json!({ "log10_mass": s.t, "max_deviation": s.max_deviation.to_string() })).collect::<Vec<_>>(),
    });
    let mut report = Report::new(&cfg.task.name(), mc, "symbolic", 0, cfg.seed).with_details(&details);
    if !decreasing {
        report = report.fail(json!("deviation from the limit does not shrink"));
    }
    Ok((report, text))
}
