use thiserror::Error;

/// Errors raised by constructors and operations.
///
/// Mathematical violations found by the checkers are not errors: they are
/// reported as failed verdicts. Errors are reserved for inputs that cannot be
/// analysed at all, unmet preconditions and exhausted budgets.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed structure: {0}")]
    Structural(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{reason} (witness {witness:?})")]
    Rejected { reason: String, witness: Vec<usize> },

    #[error("search budget of {limit} exceeded while {what}")]
    Budget { what: String, limit: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn rejected(reason: impl Into<String>, witness: Vec<usize>) -> Self {
        Error::Rejected {
            reason: reason.into(),
            witness,
        }
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
