use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures surfaced by the library.
///
/// Every variant carries a human-readable detail string; [`Error::code`]
/// gives the stable machine-readable identifier used in JSON reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ideal is not admissible: path {witness} survives modulo the relations")]
    NotAdmissible { witness: String },
    #[error("search budget exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid submodule: {0}")]
    InvalidSubmodule(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Invalid(_) => "invalid_input",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::NotAdmissible { .. } => "not_admissible",
            Error::CapExceeded(_) => "cap_exceeded",
            Error::InvalidSubmodule(_) => "invalid_submodule",
            Error::Precondition(_) => "precondition",
            Error::VerificationFailed(_) => "verification_failed",
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn cap(msg: impl Into<String>) -> Self {
        Error::CapExceeded(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::VerificationFailed(msg.into())
    }
}
