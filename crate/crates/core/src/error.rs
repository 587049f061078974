//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("filter design failed: {0}")]
    DesignFailure(String),

    #[error("ill-conditioned linear solve: {0}")]
    Conditioning(String),

    #[error("degenerate filter: refinement matrix eigenvalue 1 has multiplicity {multiplicity}")]
    DegenerateFilter { multiplicity: usize },

    #[error("window too small: need at least {required} sites, got {got}")]
    WindowTooSmall { required: usize, got: usize },

    #[error("quadrature resolution failure: {0}")]
    Resolution(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("eigenvalue out of range: {0}")]
    Eigenvalue(String),

    #[error("circuit decomposition failed: {0}")]
    DecompositionFailure(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
