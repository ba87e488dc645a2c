use std::path::PathBuf;

use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("insufficient pool: need {needed} individuals, have {available}")]
    InsufficientPool { needed: usize, available: usize },

    #[error("need at least 2 parents, got {0}")]
    InsufficientParents(usize),

    #[error("decision vector outside the problem domain: {0}")]
    Domain(String),

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),

    #[error("unsupported objective count {0} (hypervolume supports 2 or 3)")]
    UnsupportedDimension(usize),

    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
