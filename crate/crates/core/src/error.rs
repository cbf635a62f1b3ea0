use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("labeling error: {0}")]
    Labeling(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {what} (cap {cap})")]
    Resource { what: &'static str, cap: usize },

    #[error("exponent overflow: entry would exceed {cap}")]
    Overflow { cap: u32 },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A computed object contradicts a statement the tool was asked to
    /// confirm. Carries a human-readable description of the witness.
    #[error("finding: {0}")]
    Finding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
