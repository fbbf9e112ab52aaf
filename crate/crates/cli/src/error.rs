use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] dct_core::Error),
    #[error("malformed workspace: {0}")]
    Parse(String),
    #[error("{0}")]
    Input(String),
    #[error("cannot read {0}")]
    Io(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Parse(_) => "malformed_workspace",
            CliError::Input(_) => "invalid_input",
            CliError::Io(_) => "io",
        }
    }

    /// Exit status: 1 when a library check found a violation, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(dct_core::Error::VerificationFailed(_)) => 1,
            _ => 2,
        }
    }
}
