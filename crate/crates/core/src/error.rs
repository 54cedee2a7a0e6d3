use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Shapes or carrier dimensions do not line up.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// An input structure failed its axioms; the operation refuses to run.
    #[error("{what} is invalid ({} violation(s))", report.violations.len())]
    Invalid {
        what: String,
        report: ValidationReport,
    },

    /// Two structures are defined over different coalgebras.
    #[error("base coalgebra mismatch: {0}")]
    BaseMismatch(String),

    /// A documented precondition (e.g. a theorem hypothesis) is not met.
    #[error("{0}")]
    Precondition(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown structure: {0}")]
    Unknown(String),
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
