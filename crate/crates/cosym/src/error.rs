use crate::expr::{EvalError, ParseError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("fields live on different charts")]
    ChartMismatch,
    #[error("component count {got} does not match chart dimension {dim}")]
    BadDimension { got: usize, dim: usize },
    #[error("exterior derivative unsupported for degree {0}")]
    UnsupportedDegree(usize),
    #[error("metric is singular at point {point:?}")]
    SingularMetric { point: Vec<f64> },
    #[error("metric is not positive definite at point {point:?}")]
    NotPositiveDefinite { point: Vec<f64> },
    #[error("symbolic inversion limited to dimension <= {max}, got {got}")]
    DimensionTooLarge { got: usize, max: usize },
    #[error("operation requires n = 1 (dimension 3), structure has n = {0}")]
    UnsupportedCrDimension(usize),
    #[error("vector field is not a section of ker eta: |eta(X)| = {residual:.3e} at {point:?}")]
    NotHorizontal { residual: f64, point: Vec<f64> },
    #[error("the two Levi form expressions disagree: bracket {bracket}, exterior {exterior}")]
    LeviConventionMismatch { bracket: f64, exterior: f64 },
    #[error("structure is not CR-integrable (max residual {residual:.3e})")]
    NotCrIntegrable { residual: f64 },
    #[error("deformation rejected: d(beta) wedge eta = {residual:.3e} exceeds tolerance")]
    DeformationNotAdmissible { residual: f64 },
    #[error("hermitian coefficient matrix is not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },
    #[error("model `{0}` requires the global-cr realization")]
    WrongRealization(String),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
