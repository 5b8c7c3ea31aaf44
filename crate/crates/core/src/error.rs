use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 decode error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("{path}:{line}: {reason}")]
    GraphFile {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("adjacency matrix error at row {row}, column {col}: {reason}")]
    Matrix {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("graph of order {order} exceeds the supported limit of {limit} for {what}")]
    OrderLimit {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
