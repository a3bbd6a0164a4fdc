use thiserror::Error;

/// Where a builder sends a degenerate input instead of answering it.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Redirect {
    /// Both lines through the shared point are orthogonal to it.
    C5,
    /// The pencil case with a singular shared point.
    Rank8Case1,
    /// The pencil case with both lines tangent to the isotropic conic.
    Rank8Case2,
    /// A line lies inside the eigenscheme.
    Eigenline,
    /// No construction applies.
    None,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degenerate input ({reason}); redirect: {redirect:?}")]
    Degenerate { reason: String, redirect: Redirect },
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn degenerate(reason: impl Into<String>, redirect: Redirect) -> Self {
        Error::Degenerate {
            reason: reason.into(),
            redirect,
        }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
