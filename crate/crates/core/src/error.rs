use thiserror::Error;

use crate::designs::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Steiner triple system: {0}")]
    Validation(Box<ValidationReport>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("vector entries sum to {0}, expected 0")]
    NonzeroSum(String),

    #[error("malformed input at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("entry {index} of the flow vector is zero")]
    ZeroEntry { index: usize },

    #[error("flow vector sums to {sum} at point {point}")]
    NonzeroPointSum { point: u32, sum: i64 },

    #[error("no covering function with at least {floor} blocks per point exists")]
    CoveringInfeasible { floor: usize },

    #[error("point {point} receives only {size} blocks outside the pencil")]
    SmallCoveringClass { point: u32, size: usize },

    #[error("required substructure is absent: {0}")]
    SubstructureAbsent(String),

    #[error("not completely regular: vertex {vertex} in layer {layer}")]
    NotCompletelyRegular { vertex: usize, layer: usize },

    #[error("eigenvalue-indexed query on the degenerate block graph of order 7")]
    Degenerate,

    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
