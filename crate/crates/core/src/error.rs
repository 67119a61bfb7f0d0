use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An enumeration or graph would exceed the configured vertex cap.
    #[error("resource guard: {what} has {size} elements, limit is {limit}")]
    ResourceGuard {
        what: String,
        size: u128,
        limit: usize,
    },

    #[error("count overflow while computing {0}")]
    Overflow(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The search ran out of its node or time budget. The bounds are the best
    /// known when it stopped; the result is inexact.
    #[error("search budget exhausted after {nodes} nodes: best lower bound {lower}, upper bound {upper}")]
    Timeout {
        lower: usize,
        upper: usize,
        nodes: u64,
    },

    #[error("family is not {0}-intersecting")]
    NotIntersecting(usize),

    #[error("family is trivially {0}-intersecting (common intersection has at least {0} elements)")]
    TriviallyIntersecting(usize),

    /// A construction's claimed property failed to hold.
    #[error("construction check failed: {0}")]
    Construction(String),

    #[error("cache row for {0} differs from the recomputed row")]
    CacheMismatch(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("format error: {0}")]
    Format(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Format(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
