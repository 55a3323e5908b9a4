use thiserror::Error;

use crate::dual::DualSolution;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProblemError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid problem definition: {0}")]
    InvalidDefinition(String),
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
    #[error("override not supported for `{problem}`: {reason}")]
    UnsupportedOverride { problem: String, reason: String },
}

#[derive(Debug, Clone, Error)]
pub enum DualError<T: Scalar> {
    #[error("direction subproblem needs at least one gradient of positive length")]
    Empty,
    #[error("gradient {index} has length {found}, expected {expected}")]
    Ragged {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("gradient {0} has a non-finite component")]
    NonFinite(usize),
    #[error("Frank-Wolfe stopped after {} iterations with duality gap {}", .best.fw_iterations, .best.duality_gap)]
    NotConverged { best: Box<DualSolution<T>> },
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ScalingError {
    #[error("zero step: Barzilai-Borwein coefficients are undefined for s = 0")]
    ZeroStep,
    #[error("expected {expected} gradient differences, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("alpha bounds must satisfy 0 < alpha_min <= alpha_max")]
    InvalidBounds,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LineSearchError {
    #[error("line search failed: stepsize fell below {floor:e} after {trials} trials")]
    StepTooSmall { trials: usize, floor: f64 },
    #[error("invalid line-search parameters: {0}")]
    InvalidParams(&'static str),
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

#[derive(Debug, Clone, Error)]
pub enum SolveError<T: Scalar> {
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Dual(#[from] DualError<T>),
    #[error(transparent)]
    Scaling(#[from] ScalingError),
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(&'static str),
}
