use crate::zeta::Basis;

/// Errors surfaced by the algebraic and transform layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ground-set size mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("operands are attached to different groups")]
    GroupMismatch,

    #[error("{0}")]
    Domain(String),

    #[error("cardinality overflow: {0}")]
    Overflow(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("coefficient vector is in the {got:?} basis, expected {expected:?}")]
    BasisMismatch { expected: Basis, got: Basis },

    #[error("representation construction failed: {0}")]
    Construction(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
