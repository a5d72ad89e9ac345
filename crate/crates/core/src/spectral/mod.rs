//! Exact spectra on the finite monomial spaces `P_N`, the exactly solvable
//! harmonic model, and a floating-point cross-check for two bodies.

mod basis;
mod fd;
mod harmonic;
mod matrix;

pub use basis::MonomialBasis;
pub use fd::{fd_oracle_n2, FdOptions, FdResult};
pub use harmonic::{gauge_for_omega, harmonic_model, harmonic_spectrum, HarmonicSpec, SpectrumReport};
pub use matrix::{operator_matrix, OperatorMatrix};

use crate::model::ModelError;
use crate::operators::OperatorError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("operator leaves the space: produced monomial {witness}")]
    NotInvariant { witness: String },
    #[error("operator matrix is not triangular: entry ({row}, {col})")]
    NotTriangular { row: usize, col: usize },
    #[error("invalid gauge: {0}")]
    InvalidGauge(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("finite differences did not converge: relative change {change:e} at level {level}")]
    NotConverged { level: usize, change: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
}
