use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the solver, schedule generators, simulator and bench front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("simplex did not terminate within {0} pivots")]
    IterationLimit(usize),

    #[error("LP is unbounded")]
    Unbounded,

    #[error("LP is infeasible")]
    Infeasible,

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    /// True for errors caused by a bad config or bad parameters rather than a runtime failure.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config(_) | Error::Input(_) | Error::Json(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
