use serde::Serialize;

use super::SpectralError;

#[derive(Clone, Debug, Serialize)]
pub struct FdOptions {
    /// Cells on the coarsest grid; level `i` uses `base_points · 2^i`.
    pub base_points: usize,
    pub levels: usize,
    /// The cutoff is placed where `e^{−aρ}` falls below this value, then
    /// stretched by `cutoff_stretch` to leave room for excited states.
    pub decay: f64,
    pub cutoff_stretch: f64,
    /// Allowed relative change between the last two extrapolated values.
    pub tol: f64,
}

impl Default for FdOptions {
    fn default() -> Self {
        FdOptions { base_points: 2000, levels: 5, decay: 1e-12, cutoff_stretch: 1.5, tol: 1e-7 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FdResult {
    /// Richardson-extrapolated eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Raw eigenvalues per grid level.
    pub raw: Vec<Vec<f64>>,
    pub rho_max: f64,
    /// Largest relative change between the last two extrapolations.
    pub change: f64,
}

/// Lowest `k_max` eigenvalues of `−2κ(ρ ∂²_ρ + (d/2) ∂_ρ) + ωρ` on
/// `[0, ρ_max]` with a zero boundary condition at the cutoff.
///
/// Works in `r = √ρ`, where the operator is the S-wave part of
/// `−(κ/2) ∇² + ω r²` in `d` dimensions, discretized in flux form on a
/// cell-centred grid and symmetrized by the radial weight `r^{d−1}`.
pub fn fd_oracle_n2(masses: &[f64], d: u32, omega: f64, k_max: usize, opts: &FdOptions) -> Result<FdResult, SpectralError> {
    if masses.len() != 2 || masses.iter().any(|m| !(*m > 0.0)) {
        return Err(SpectralError::InvalidGrid("two positive masses required".into()));
    }
    if !(omega > 0.0) || d == 0 || k_max == 0 || opts.base_points < 10 || opts.levels < 2 {
        return Err(SpectralError::InvalidGrid("need omega > 0, d >= 1, k_max >= 1, at least 10 cells and 2 levels".into()));
    }
    let kappa = 1.0 / masses[0] + 1.0 / masses[1];
    let a = (omega / (2.0 * kappa)).sqrt();
    let rho_max = opts.cutoff_stretch * (-opts.decay.ln()) / a;
    let r_max = rho_max.sqrt();

    let raw: Vec<Vec<f64>> = (0..opts.levels)
        .map(|i| level_eigenvalues(kappa, d, omega, opts.base_points << i, r_max, k_max))
        .collect();

    // Romberg tableau in h², two elimination steps at most
    let mut table = raw.clone();
    let steps = (opts.levels - 1).min(2);
    for lev in 1..=steps {
        let f = 4f64.powi(lev as i32);
        table = table
            .windows(2)
            .map(|w| w[0].iter().zip(&w[1]).map(|(c, fine)| (f * fine - c) / (f - 1.0)).collect())
            .collect();
    }
    let last = table.last().expect("at least one level").clone();
    let change = if table.len() >= 2 {
        let prev = &table[table.len() - 2];
        last.iter().zip(prev).map(|(x, y)| ((x - y) / x).abs()).fold(0.0, f64::max)
    } else {
        0.0
    };
    if !(change <= opts.tol) {
        return Err(SpectralError::NotConverged { level: opts.levels - 1, change });
    }
    Ok(FdResult { eigenvalues: last, raw, rho_max, change })
}

fn level_eigenvalues(kappa: f64, d: u32, omega: f64, cells: usize, r_max: f64, k_max: usize) -> Vec<f64> {
    let h = r_max / cells as f64;
    let weight = |r: f64| r.powi(d as i32 - 1);
    let c = kappa / 2.0 / (h * h);
    let mut diag = Vec::with_capacity(cells);
    let mut off = Vec::with_capacity(cells.saturating_sub(1));
    for i in 0..cells {
        let r = (i as f64 + 0.5) * h;
        let w = weight(r);
        // no flux through r = 0; Dirichlet ghost beyond the cutoff
        let left = if i == 0 { 0.0 } else { weight(r - 0.5 * h) };
        let right = weight(r + 0.5 * h);
        diag.push(c * (left + right) / w + omega * r * r);
        if i + 1 < cells {
            off.push(-c * right / (w * weight(r + h)).sqrt());
        }
    }
    (0..k_max).map(|k| kth_eigenvalue(&diag, &off, k)).collect()
}

/// Number of eigenvalues below `x` (Sturm sequence of the LDLᵀ pivots).
fn count_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let e2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - x - if i == 0 { 0.0 } else { e2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (diag[i].abs() + x.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn kth_eigenvalue(diag: &[f64], off: &[f64], k: usize) -> f64 {
    let n = diag.len();
    let radius = |i: usize| {
        let l = if i == 0 { 0.0 } else { off[i - 1].abs() };
        let r = if i + 1 < n { off[i].abs() } else { 0.0 };
        l + r
    };
    let mut lo = (0..n).map(|i| diag[i] - radius(i)).fold(f64::INFINITY, f64::min);
    let mut hi = (0..n).map(|i| diag[i] + radius(i)).fold(f64::NEG_INFINITY, f64::max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(diag, off, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}
