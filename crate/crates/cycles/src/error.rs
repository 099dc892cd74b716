use thiserror::Error;

/// Failure modes shared across the crate.
///
/// `Guard` marks a refusal to start work whose cost would blow past a size
/// guard; it never indicates a failed computation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("guard refusal: {0}")]
    Guard(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
