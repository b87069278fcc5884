//! Small self-contained numerical kernels.
//!
//! Matrices in this crate are tiny (a few hundred rows, under ten columns),
//! so every routine favours a short, checkable implementation over speed.

mod diff;
mod lasso;
mod linsolve;
mod matrix;
pub mod precision;
mod rk4;
mod svd;

use thiserror::Error;

pub use diff::{finite_diff, FdMode};
pub use lasso::{lasso_fit, soft_threshold, Lasso, LassoSolution};
pub use linsolve::solve_2x2;
pub use matrix::DenseMatrix;
pub use rk4::{rk4_integrate, State2};
pub use svd::{svd_values, MAX_SWEEPS};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("{0} did not converge within the iteration cap")]
    ConvergenceFailure(&'static str),
    #[error("2x2 system is singular (det = {det:e})")]
    SingularSystem { det: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("integration produced a non-finite state at t = {t}")]
    NonFiniteState { t: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
