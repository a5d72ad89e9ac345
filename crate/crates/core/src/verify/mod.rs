//! Checks for the determinant factorization, the gauge transformation to
//! Laplace-Beltrami form, the Cartesian splitting of the kinetic operator,
//! the radial measure, positivity on embedded configurations, the symmetry
//! generators and the generator decomposition.

mod conjecture2;
mod conjecture3;
mod decomposition;
mod embedding;
mod positivity;
mod report;
mod selfadjoint;
mod split_oracle;
mod symmetries;

pub use conjecture2::{check_conjecture2, FactorizationReport, Mode, PointRecord};
pub use conjecture3::{check_conjecture3, check_conjecture3_all_d, GaugeReport};
pub use decomposition::{check_sl_decomposition, DecompositionReport};
pub use embedding::{embed_points, sample_embedding, Embedding, MAX_RETRIES};
pub use positivity::{check_positivity, PositivityReport, PositivitySample};
pub use report::Report;
pub use selfadjoint::{check_selfadjoint, SelfAdjointReport};
pub use split_oracle::{cartesian_split_oracle, mutation_control, oracle_trial, MutationOutcome, MutationReport, OracleReport, OracleTrial};
pub use symmetries::{check_symmetries, So3Summary, SymmetryReport};

use crate::algebra::AlgebraError;
use crate::model::ModelError;
use crate::operators::OperatorError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no non-degenerate configuration after {retries} draws")]
    DegenerateAfterRetries { retries: usize },
    #[error("{check} failed: {witness}")]
    Violated { check: String, witness: String },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub(crate) fn strings<'a>(values: impl IntoIterator<Item = &'a crate::algebra::Rational>) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}
