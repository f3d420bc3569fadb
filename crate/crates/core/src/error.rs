use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order {0} is outside the supported range 1..=8")]
    OrderOutOfRange(usize),

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    /// The requested census lies outside what the engine will attempt.
    #[error("unsupported census: {0}")]
    Unsupported(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cache file {}: {message}", path.display())]
    Cache { path: PathBuf, message: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
