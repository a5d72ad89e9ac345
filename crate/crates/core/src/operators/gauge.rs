use std::sync::Arc;

use num_traits::Zero;

use super::{OperatorError, PolyDiffOp, RatDiffOp};
use crate::algebra::{frac, int, Monomial, MultiPoly, PolyMatrix, Rational, RationalFn, VarSet};

/// `Γ = Π base_i^{exponent_i}`
#[derive(Clone, Debug)]
pub struct GaugeSpec {
    pub factors: Vec<(MultiPoly, Rational)>,
}

impl GaugeSpec {
    pub fn new(factors: Vec<(MultiPoly, Rational)>) -> Self {
        GaugeSpec { factors }
    }

    pub fn exponents(&self) -> Vec<Rational> {
        self.factors.iter().map(|(_, e)| e.clone()).collect()
    }
}

/// Second-order operator split as `g^{μν}∂_μ∂_ν + b^μ∂_μ + c`, with `g`
/// symmetric (off-diagonal entries are half the mixed coefficient).
#[derive(Clone, Debug)]
pub struct MetricParts {
    pub g: PolyMatrix,
    pub b: Vec<MultiPoly>,
    pub c: MultiPoly,
}

pub fn metric_parts(op: &PolyDiffOp) -> Result<MetricParts, OperatorError> {
    let order = op.order().unwrap_or(0);
    if order > 2 {
        return Err(OperatorError::OrderTooHigh { order, max: 2 });
    }
    let vars = op.vars();
    let m = vars.len();
    let half = frac(1, 2);
    let mut g = PolyMatrix::zeros(vars, m);
    for i in 0..m {
        g.set(i, i, op.coeff2(i, i));
        for j in i + 1..m {
            let v = op.coeff2(i, j).scale(&half);
            g.set(i, j, v.clone());
            g.set(j, i, v);
        }
    }
    g.flag_symmetric();
    Ok(MetricParts {
        g,
        b: (0..m).map(|i| op.coeff1(i)).collect(),
        c: op.coeff0(),
    })
}

fn second_order_part(g: &PolyMatrix) -> RatDiffOp {
    let vars = g.vars();
    let m = vars.len();
    let mut out = RatDiffOp::zero(vars);
    for i in 0..m {
        out.set(Monomial::var(m, i, 2), RationalFn::from_poly(g.get(i, i).clone()));
        for j in i + 1..m {
            let alpha = Monomial::var(m, i, 1).mul(&Monomial::var(m, j, 1));
            out.set(alpha, RationalFn::from_poly(g.get(i, j).scale(&int(2))));
        }
    }
    out
}

/// `Γ⁻¹ ∘ op ∘ Γ` for an order-2 operator, written through the logarithmic
/// derivatives `λ_μ = ∂_μ log Γ = N_μ / D` with `D = Π base_i`:
///
/// `op + 2 g^{μν} λ_ν ∂_μ + g^{μν}(∂_μ λ_ν + λ_μ λ_ν) + b^μ λ_μ`.
pub fn conjugate_power_gauge(op: &PolyDiffOp, gauge: &GaugeSpec) -> Result<RatDiffOp, OperatorError> {
    let parts = metric_parts(op)?;
    let vars = op.vars().clone();
    let m = vars.len();
    for (i, (base, _)) in gauge.factors.iter().enumerate() {
        if base.is_zero() {
            return Err(OperatorError::DegenerateBase(i));
        }
    }
    let active: Vec<&(MultiPoly, Rational)> = gauge.factors.iter().filter(|(_, e)| !e.is_zero()).collect();
    if active.is_empty() {
        return Ok(RatDiffOp::from_poly_op(op));
    }
    let den = active.iter().fold(MultiPoly::one(&vars), |acc, (b, _)| &acc * b);
    let numer: Vec<MultiPoly> = (0..m)
        .map(|mu| {
            let mut acc = MultiPoly::zero(&vars);
            for (i, (base, e)) in active.iter().enumerate() {
                let mut t = base.derivative(mu).scale(e);
                for (j, (other, _)) in active.iter().enumerate() {
                    if j != i {
                        t = &t * other;
                    }
                }
                acc += &t;
            }
            acc
        })
        .collect();
    let den_grad: Vec<MultiPoly> = (0..m).map(|mu| den.derivative(mu)).collect();

    let mut out = RatDiffOp::from_poly_op(&op.part_of_order(2));
    for mu in 0..m {
        let mut num = &parts.b[mu] * &den;
        for nu in 0..m {
            num += &(parts.g.get(mu, nu) * &numer[nu]).scale(&int(2));
        }
        out.set(Monomial::var(m, mu, 1), RationalFn::new(num, den.clone())?);
    }
    let den2 = &den * &den;
    let mut zeroth = &parts.c * &den2;
    for mu in 0..m {
        for nu in 0..m {
            let g = parts.g.get(mu, nu);
            if g.is_zero() {
                continue;
            }
            let inner = &numer[nu].derivative(mu) * &den - &numer[nu] * &den_grad[mu] + &numer[mu] * &numer[nu];
            zeroth += &(g * &inner);
        }
        zeroth += &(&(&parts.b[mu] * &numer[mu]) * &den);
    }
    out.set(Monomial::one(m), RationalFn::new(zeroth, den2)?);
    Ok(out)
}

/// `g^{μν}∂_μ∂_ν + [∂_μ g^{μν} − ½ g^{μν} ∂_μ log det] ∂_ν`, where `det` is
/// the determinant of `g` supplied by the caller.
pub fn laplace_beltrami(g: &PolyMatrix, det: &MultiPoly) -> Result<RatDiffOp, OperatorError> {
    let vars: Arc<VarSet> = g.vars().clone();
    let m = vars.len();
    let mut out = second_order_part(g);
    let det_grad: Vec<MultiPoly> = (0..m).map(|mu| det.derivative(mu)).collect();
    let half = frac(1, 2);
    for nu in 0..m {
        let mut div = MultiPoly::zero(&vars);
        let mut log_term = MultiPoly::zero(&vars);
        for mu in 0..m {
            div += &g.get(mu, nu).derivative(mu);
            log_term += &(g.get(mu, nu) * &det_grad[mu]);
        }
        let num = &div * det - log_term.scale(&half);
        out.set(Monomial::var(m, nu, 1), RationalFn::new(num, det.clone())?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_gauge_on_second_derivative() {
        let vars = Arc::new(VarSet::new(["rho"]).unwrap());
        let rho = MultiPoly::var(&vars, 0);
        let d = PolyDiffOp::partial(&vars, 0);
        let d2 = d.compose(&d).unwrap();
        let got = conjugate_power_gauge(&d2, &GaugeSpec::new(vec![(rho.clone(), frac(1, 2))])).unwrap();
        let mut want = RatDiffOp::from_poly_op(&d2);
        want.set(Monomial::var(1, 0, 1), RationalFn::new(MultiPoly::one(&vars), rho.clone()).unwrap());
        want.set(
            Monomial::one(1),
            RationalFn::new(MultiPoly::constant(&vars, frac(-1, 4)), &rho * &rho).unwrap(),
        );
        assert!(got.equals(&want), "{got}");
        let trivial = conjugate_power_gauge(&d2, &GaugeSpec::new(vec![(rho.clone(), Rational::zero())])).unwrap();
        assert!(trivial.equals(&RatDiffOp::from_poly_op(&d2)));
        let zero_base = GaugeSpec::new(vec![(MultiPoly::zero(&vars), int(1))]);
        assert!(matches!(conjugate_power_gauge(&d2, &zero_base), Err(OperatorError::DegenerateBase(0))));
    }
}
