use thiserror::Error;

/// Errors surfaced by the library. The CLI maps each variant onto an exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("partitions of different totals ({0} vs {1})")]
    MismatchedTotals(usize, usize),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    /// Two independent evaluation routes disagreed on a value they must share.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}
