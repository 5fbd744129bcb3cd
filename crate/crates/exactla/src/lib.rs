//! Exact rational linear algebra and polyhedral kernel.
//!
//! Everything here is exact: ranks, kernels, LP feasibility, positive
//! envelopes and extreme rays are computed over `BigRational` with no
//! floating point anywhere. Answers are certificates, not estimates.

pub mod cone;
pub mod matrix;
pub mod simplex;
pub mod vector;

pub use cone::{ConeDescription, RayData};
pub use matrix::{
    intersect_spans, kernel_basis, kernel_basis_in_span, rank_of_span, solve_linear, span_contains,
};
pub use simplex::{cone_membership, max_coordinate, positive_envelope};
pub use vector::{dot, primitive, rat, ratio, zeros, QVec, Rat};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactlaError {
    #[error("dimension mismatch: expected vectors of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("target vector is not in the nonnegative cone of the generators")]
    NotInCone,
}

/// Checks that all vectors have the given length.
pub fn check_dims(vectors: &[QVec], expected: usize) -> Result<(), ExactlaError> {
    for v in vectors {
        if v.len() != expected {
            return Err(ExactlaError::DimensionMismatch {
                expected,
                got: v.len(),
            });
        }
    }
    Ok(())
}
