//! Exact construction and verification of the radial Laplacian of the
//! quantum n-body problem written in squared relative distances
//! `rho_ij = |r_i - r_j|^2`.

pub mod algebra;
pub mod model;
pub mod operators;
pub mod verify;
pub mod spectral;
