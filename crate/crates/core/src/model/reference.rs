use num_traits::{One, Zero};

use super::volumes::tilde_values;
use super::{MassConfig, ModelError, VolumeSet};
use crate::algebra::{frac, int, rational::pow, MultiPoly, Rational, RationalFn, VarSet};
use crate::model::cayley_menger_value;
use crate::operators::GaugeSpec;

/// Arithmetic shared by polynomials and point values, so each closed-form
/// factor is written once.
pub(crate) trait Ring: Clone {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl Ring for MultiPoly {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, c: &Rational) -> Self {
        MultiPoly::scale(self, c)
    }
}

impl Ring for Rational {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

/// `F₂` from the sums `tilde[k] = Ṽ_k²` (with `tilde[1] = 1`). For
/// `n ≥ 5` the closed forms hold at unit masses; equal masses `μ` rescale
/// them by `μ^{2n−1−M}`.
pub(crate) fn f2_formula<T: Ring>(cfg: &MassConfig, tilde: &[T]) -> Result<T, ModelError> {
    let t = |k: usize| &tilde[k];
    Ok(match cfg.n {
        2 => t(1).scale(&(&cfg.masses[0] * &cfg.masses[1])),
        3 => t(2).clone(),
        4 => t(3).mul(t(2)).sub(&t(4).scale(&(int(9) * cfg.total_mass()))),
        5 | 6 => {
            if !cfg.equal_masses() {
                return Err(ModelError::UnsupportedCase(format!("F2 for n = {} needs equal masses", cfg.n)));
            }
            let unit = if cfg.n == 5 {
                let v2sq = t(2).mul(t(2));
                t(5).mul(&v2sq)
                    .scale(&int(-4))
                    .add(&t(4).mul(t(3)).mul(t(2)))
                    .sub(&t(4).mul(t(4)).scale(&int(45)))
            } else {
                let inner = t(6)
                    .scale(&int(3600))
                    .sub(&t(5).mul(t(2)).scale(&int(48)))
                    .sub(&t(4).mul(t(3)).scale(&int(6)))
                    .add(&t(3).mul(t(3)).mul(t(2)).scale(&frac(1, 9)));
                let outer = t(5)
                    .mul(t(2))
                    .mul(t(2))
                    .scale(&int(4))
                    .sub(&t(4).mul(t(3)).mul(t(2)))
                    .add(&t(4).mul(t(4)).scale(&int(54)));
                t(6).mul(&inner).scale(&int(25)).add(&t(5).mul(&outer)).scale(&int(-1))
            };
            let m = cfg.pair_count() as i64;
            let e = 2 * cfg.n as i64 - 1 - m;
            let mu = &cfg.masses[0];
            let factor = if e >= 0 { pow(mu, e as u32) } else { pow(&mu.recip(), (-e) as u32) };
            unit.scale(&factor)
        }
        n => return Err(ModelError::UnsupportedCase(format!("no closed form for F2 at n = {n}"))),
    })
}

/// The closed-form second factor of the metric determinant, `n ≤ 6`
/// (unequal masses only up to `n = 4`).
pub fn reference_f2(cfg: &MassConfig, vols: &VolumeSet) -> Result<MultiPoly, ModelError> {
    f2_formula(cfg, &vols.tilde)
}

/// Volume sums evaluated at one point of the pair variables.
#[derive(Clone, Debug)]
pub struct PointVolumes {
    pub tilde: Vec<Rational>,
    pub f1: Rational,
}

impl PointVolumes {
    pub fn at(cfg: &MassConfig, vars: &VarSet, rho: &[Rational]) -> Result<Self, ModelError> {
        let tilde = tilde_values(cfg, vars, rho)?;
        let all: Vec<usize> = (1..=cfg.n).collect();
        let f1 = cayley_menger_value(&all, vars, rho);
        Ok(PointVolumes { tilde, f1 })
    }

    pub fn f2(&self, cfg: &MassConfig) -> Result<Rational, ModelError> {
        f2_formula(cfg, &self.tilde)
    }
}

/// `Γ = F₁^{(n−1−d)/4} F₂^{−1/4}`
pub fn gauge_spec(cfg: &MassConfig, vols: &VolumeSet) -> Result<GaugeSpec, ModelError> {
    let f2 = reference_f2(cfg, vols)?;
    Ok(GaugeSpec::new(vec![
        (vols.f1.clone(), Rational::new((cfg.n as i64 - 1 - cfg.d).into(), 4.into())),
        (f2, frac(-1, 4)),
    ]))
}

/// Closed-form effective potential for `n ∈ {2, 3, 4}` (`n = 4` at equal
/// unit masses only).
///
/// For three bodies the singular term is
/// `(d−2)(d−4)/32 · F₂ / (m₁m₂m₃ F₁)`, which agrees with the expression
/// through `ρ_ij` and the factor `Σρ² − 2Σρρ = −16 F₁`.
pub fn reference_veff(cfg: &MassConfig, vols: &VolumeSet) -> Result<RationalFn, ModelError> {
    let vars = vols.vars.clone();
    let d = cfg.d_rational();
    let m = &cfg.masses;
    let c = |v: Rational| MultiPoly::constant(&vars, v);
    match cfg.n {
        2 => {
            let num = (&d - int(1)) * (&d - int(3)) * (&m[0] + &m[1]);
            let den = MultiPoly::var(&vars, 0).scale(&(int(8) * &m[0] * &m[1]));
            Ok(RationalFn::new(c(num), den)?)
        }
        3 => {
            let f2 = reference_f2(cfg, vols)?;
            let first = RationalFn::new(c(frac(3, 8) * cfg.total_mass()), f2.clone())?;
            let coeff = (&d - int(2)) * (&d - int(4)) / int(32);
            if coeff.is_zero() {
                return Ok(first);
            }
            let mass_prod = &m[0] * &m[1] * &m[2];
            let second = RationalFn::new(f2.scale(&coeff), vols.f1.scale(&mass_prod))?;
            Ok(first.add(&second))
        }
        4 => {
            if !cfg.masses.iter().all(|v| v.is_one()) {
                return Err(ModelError::UnsupportedCase("four-body effective potential needs unit masses".into()));
            }
            let f2 = reference_f2(cfg, vols)?;
            let v2 = vols.tilde(2);
            let v3 = vols.tilde(3);
            let first = RationalFn::new(&(v2 * v2).scale(&int(3)) + &v3.scale(&int(112)), f2.scale(&int(32)))?;
            let coeff = (&d - int(3)) * (&d - int(5)) / int(72);
            if coeff.is_zero() {
                return Ok(first);
            }
            let second = RationalFn::new(v3.scale(&coeff), vols.f1.clone())?;
            Ok(first.add(&second))
        }
        n => Err(ModelError::UnsupportedCase(format!("no closed-form effective potential for n = {n}"))),
    }
}
