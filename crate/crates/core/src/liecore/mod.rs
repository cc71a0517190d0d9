//! Lie algebras given by structure constants: validation, brackets, adjoint
//! matrices, derived and lower central series, center, Killing form and
//! derivations.

mod algebra;
mod derivations;
mod series;

pub use algebra::{default_labels, format_vector, validate_structure, LieAlgebra, RawAlgebra};
pub use series::{SeriesResult, Sign};

use thiserror::Error;

/// Indices in these errors are 1-based, matching the `.lie` file format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("inconsistent constants for [e{i}, e{j}] along e{k}: the bracket must be antisymmetric")]
    AntisymmetryViolation { i: usize, j: usize, k: usize },
    #[error("constant for ({i}, {j}, {k}) given twice")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k}) = ({triple}): residual {residual}")]
    JacobiViolation { i: usize, j: usize, k: usize, triple: String, residual: String },
    #[error("matrix realization does not reproduce [e{i}, e{j}]")]
    RepMismatch { i: usize, j: usize },
    #[error("matrix realization is linearly dependent")]
    RepNotFaithful,
    #[error("malformed matrix realization: {0}")]
    RepShape(String),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("expected {expected} grading weights, found {found}")]
    GradingLength { expected: usize, found: usize },
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
}
