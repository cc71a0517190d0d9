//! Exact rational linear algebra, polynomials over Q, certified complex root
//! isolation and integer-relation detection.
//!
//! Everything here is a pure function of its inputs. Numerical work is done in
//! binary fixed point on top of `num-bigint`, so results do not depend on the
//! host's floating point behaviour.

mod fixed;
mod lp;
mod matrix;
mod poly;
mod rational;
mod relation;
mod roots;
mod sparse;
mod subspace;

pub use fixed::{Cx, Fx};
pub use lp::find_nonnegative_point;
pub use matrix::{MatrixQ, Rref};
pub use poly::PolyQ;
pub use rational::{format_rational, parse_rational, q, qf, Rational};
pub use relation::{q_linear_rank, Certainty, QRank, SpanValue};
pub(crate) use roots::clustered_roots;
pub use roots::{complex_roots, complex_roots_default, real_root_count, ApproxRoot, DEFAULT_MAX_PRECISION};
pub use sparse::SparseEliminator;
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("could not isolate roots at {precision} bits; raise the precision")]
    IsolationFailed { precision: u32 },
    #[error("precision of {precision} bits is too low for height bound {height_bound} with {count} values (need about {needed} bits)")]
    PrecisionTooLow { precision: u32, height_bound: u64, count: usize, needed: u32 },
}
