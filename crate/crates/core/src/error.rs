use std::path::PathBuf;

use thiserror::Error;

use crate::report::VerificationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),

    #[error("table is not an IP loop (failed: {})", .0.failed_ids().join(", "))]
    NotIpLoop(Box<VerificationReport>),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("construction precondition failed (failed: {})", .0.failed_ids().join(", "))]
    PreconditionFailed(Box<VerificationReport>),

    #[error("invalid smash input (failed: {})", .0.failed_ids().join(", "))]
    InvalidInput(Box<VerificationReport>),

    #[error("theorem hypotheses not met (failed: {})", .0.failed_ids().join(", "))]
    HypothesisNotMet(Box<VerificationReport>),

    #[error("dimodules are defined over different Hopf structures")]
    HMismatch,

    #[error("operation requires a dimodule over a Hopf {expected}")]
    VariantMismatch { expected: &'static str },

    #[error("{}:{line}: {msg}", .path.as_ref().map(|p| p.display().to_string()).unwrap_or_else(|| "<input>".into()))]
    Parse {
        path: Option<PathBuf>,
        line: usize,
        msg: String,
    },

    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimMismatch(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: None,
            line,
            msg: msg.into(),
        }
    }

    /// Attaches a file path to a parse error that was produced from in-memory text.
    pub fn with_path(self, p: impl Into<PathBuf>) -> Self {
        match self {
            Error::Parse { path: None, line, msg } => Error::Parse {
                path: Some(p.into()),
                line,
                msg,
            },
            other => other,
        }
    }
}
