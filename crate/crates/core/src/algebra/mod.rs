//! Exact arithmetic: rationals, sparse polynomials over named variables,
//! rational functions, polynomial matrices and randomized identity testing.

mod identity;
mod matrix;
mod poly;
pub mod rational;
mod ratfn;
mod vars;

pub use identity::{false_accept_log10, random_assignment, random_rational_point, run_trials, trial_rng, DEFAULT_BOUND, DEFAULT_TRIALS};
pub use matrix::{poly_det, poly_det_budgeted, PolyMatrix, RatMatrix, DEFAULT_TERM_BUDGET};
pub use poly::{Exponents, Monomial, MultiPoly};
pub(crate) use poly::assert_same_vars;
pub use rational::{exact_sqrt, frac, int, parse_rational, to_f64, Rational};
pub use ratfn::RationalFn;
pub use vars::{pair_count, pairs, rho_name, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("duplicate variable name {0}")]
    DuplicateVariable(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),
    #[error("division leaves nonzero remainder {remainder}")]
    NotDivisible { remainder: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("intermediate expression exceeded {budget} terms")]
    BudgetExceeded { budget: usize },
    #[error("matrix is singular")]
    Singular,
}
