use alloc::string::String;

use crate::graph::VariableId;

/// Errors produced by the structure-learning core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("variable index {index} out of range for {d} variables")]
    IndexOutOfRange { index: VariableId, d: usize },
    #[error("self-loop on variable {0}")]
    SelfLoop(VariableId),
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("column {column} is continuous; the plug-in estimator needs discrete columns")]
    EstimatorMismatch { column: VariableId },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("non-finite {phase} score {score} for edge ({i}, {j}) at step {step}")]
    NonFiniteScore {
        phase: &'static str,
        i: VariableId,
        j: VariableId,
        step: usize,
        score: f64,
    },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn invalid_argument(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn invalid_data(msg: impl Into<String>) -> Error {
    Error::InvalidData(msg.into())
}
