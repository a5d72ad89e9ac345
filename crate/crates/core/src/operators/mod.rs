//! Linear differential operators with polynomial or rational-function
//! coefficients.

mod gauge;
mod poly_op;
mod rat_op;

pub use gauge::{conjugate_power_gauge, laplace_beltrami, metric_parts, GaugeSpec, MetricParts};
pub use poly_op::{PolyDiffOp, MAX_ORDER};
pub(crate) use poly_op::write_derivative;
pub use rat_op::RatDiffOp;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OperatorError {
    #[error("derivative order {order} exceeds the cap of {}", MAX_ORDER)]
    OrderCap { order: u32 },
    #[error("operator of order {order} where at most {max} is supported")]
    OrderTooHigh { order: u32, max: u32 },
    #[error("second-order part is not symmetric")]
    NotSymmetric,
    #[error("gauge base {0} is the zero polynomial")]
    DegenerateBase(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `Π_k C(top_k, sub_k)`
pub(crate) fn multi_binomial(top: &[u16], sub: &[u16]) -> num_bigint::BigInt {
    let mut acc = num_bigint::BigInt::from(1);
    for (&t, &s) in top.iter().zip(sub) {
        let mut c = num_bigint::BigInt::from(1);
        for j in 0..s {
            c = c * (t - j) / (j + 1);
        }
        acc *= c;
    }
    acc
}

/// Every multi-index `γ ≤ α` componentwise.
pub(crate) fn sub_indices(alpha: &crate::algebra::Monomial) -> Vec<crate::algebra::Monomial> {
    let mut out = vec![crate::algebra::Monomial::one(alpha.len())];
    for (k, &e) in alpha.exponents().iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for m in &out {
            for v in 0..=e {
                let mut exps = m.exponents().to_vec();
                exps[k] = v;
                next.push(crate::algebra::Monomial::from_exponents(&exps));
            }
        }
        out = next;
    }
    out
}
