use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("{what} exceeds the exact-mode limit (n = {n}, limit = {limit})")]
    Capacity {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("spec #{index}: {source}")]
    InSpec {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    /// True for errors caused by bad input rather than by the computation.
    pub fn is_usage(&self) -> bool {
        match self {
            Error::Validation(_) | Error::Capacity { .. } => true,
            Error::InSpec { source, .. } => source.is_usage(),
            Error::NoSolution(_) | Error::Io(_) => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
