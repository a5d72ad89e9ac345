use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{operator_matrix, MonomialBasis, SpectralError};
use crate::algebra::{exact_sqrt, int, Monomial, MultiPoly, Rational};
use crate::model::{build_delta_rad, MassConfig};
use crate::operators::PolyDiffOp;

/// Gauge `e^{−a·ρ}` with the potential it makes exactly solvable.
#[derive(Clone, Debug, Serialize)]
pub struct HarmonicSpec {
    #[serde(with = "crate::algebra::rational::vec_as_string")]
    pub a: Vec<Rational>,
    /// `V = Σ g^{μν} a_μ a_ν`, linear in `ρ`.
    #[serde(serialize_with = "display")]
    pub potential: MultiPoly,
    /// `E₀ = b·a`
    #[serde(with = "crate::algebra::rational::as_string")]
    pub e0: Rational,
}

fn display<S: serde::Serializer>(p: &MultiPoly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// Returns the potential and the gauged operator
/// `h = −Δ_rad + 2 Σ g^{μν} a_ν ∂_μ`, so that `h p = λ p` gives
/// `(−Δ_rad + V) e^{−a·ρ} p = (λ + E₀) e^{−a·ρ} p`.
pub fn harmonic_model(cfg: &MassConfig, a: &[Rational]) -> Result<(HarmonicSpec, PolyDiffOp), SpectralError> {
    let r = build_delta_rad(cfg)?;
    let m = r.vars.len();
    if a.len() != m {
        return Err(SpectralError::InvalidGauge(format!("expected {m} gauge entries, got {}", a.len())));
    }
    if a.iter().any(Signed::is_negative) || a.iter().all(Zero::is_zero) {
        return Err(SpectralError::InvalidGauge("entries must be nonnegative and not all zero".into()));
    }
    let mut potential = MultiPoly::zero(&r.vars);
    let mut h = r.op.scale(&int(-1));
    for mu in 0..m {
        let mut ga = MultiPoly::zero(&r.vars);
        for nu in 0..m {
            ga += &r.g.get(mu, nu).scale(&a[nu]);
        }
        potential += &ga.scale(&a[mu]);
        h.add_term(Monomial::var(m, mu, 1), ga.scale(&int(2)));
    }
    let e0 = r.b.iter().zip(a).fold(Rational::zero(), |acc, (b, x)| acc + b * x);
    Ok((HarmonicSpec { a: a.to_vec(), potential, e0 }, h))
}

/// Gauge `a` with `2 κ a² = ω` for two bodies, `κ = 1/m₁ + 1/m₂`; errors
/// when the root is irrational.
pub fn gauge_for_omega(cfg: &MassConfig, omega: &Rational) -> Result<Rational, SpectralError> {
    if cfg.n != 2 {
        return Err(SpectralError::InvalidGauge("closed-form inversion only for two bodies".into()));
    }
    if !omega.is_positive() {
        return Err(SpectralError::InvalidGauge("omega must be positive".into()));
    }
    let kappa = cfg.inverse_masses().iter().fold(Rational::zero(), |a, b| a + b);
    exact_sqrt(&(omega / (kappa * int(2))))
        .ok_or_else(|| SpectralError::InvalidGauge(format!("omega = {omega} needs an irrational gauge for these masses")))
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    #[serde(with = "crate::algebra::rational::vec_as_string")]
    pub masses: Vec<Rational>,
    pub d: i64,
    #[serde(with = "crate::algebra::rational::vec_as_string")]
    pub a: Vec<Rational>,
    #[serde(rename = "N")]
    pub max_degree: u32,
    #[serde(rename = "E0", with = "crate::algebra::rational::as_string")]
    pub e0: Rational,
    /// Distinct eigenvalues, ascending.
    #[serde(with = "crate::algebra::rational::vec_as_string")]
    pub eigenvalues: Vec<Rational>,
    pub multiplicities: Vec<usize>,
    pub basis_size: usize,
    pub triangular: bool,
    pub diagonal_nonnegative: bool,
    #[serde(serialize_with = "display")]
    pub potential: MultiPoly,
}

impl SpectrumReport {
    /// Eigenvalues repeated by multiplicity.
    pub fn levels(&self) -> Vec<Rational> {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(e, &k)| std::iter::repeat_n(e.clone(), k))
            .collect()
    }
}

/// Eigenvalues of `−Δ_rad + V` on `e^{−a·ρ} P_N`, read off the diagonal
/// of the triangular matrix of `h`.
pub fn harmonic_spectrum(cfg: &MassConfig, a: &[Rational], max_degree: u32) -> Result<SpectrumReport, SpectralError> {
    if max_degree == 0 {
        return Err(SpectralError::InvalidGauge("N must be at least 1".into()));
    }
    let (spec, h) = harmonic_model(cfg, a)?;
    let basis = MonomialBasis::new(h.vars().len(), max_degree);
    let mat = operator_matrix(&h, &basis)?;
    if let (Some((row, col)), Some(_)) = (mat.below_diagonal(), mat.above_diagonal()) {
        return Err(SpectralError::NotTriangular { row, col });
    }
    let diag = mat.diagonal();
    let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
    for x in &diag {
        *counts.entry(x + &spec.e0).or_default() += 1;
    }
    Ok(SpectrumReport {
        n: cfg.n,
        masses: cfg.masses.clone(),
        d: cfg.d,
        a: spec.a,
        max_degree,
        e0: spec.e0,
        eigenvalues: counts.keys().cloned().collect(),
        multiplicities: counts.values().copied().collect(),
        basis_size: basis.len(),
        triangular: true,
        diagonal_nonnegative: diag.iter().all(|x| !x.is_negative()),
        potential: spec.potential,
    })
}
