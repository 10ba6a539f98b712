use jfrieze_core::Error;
use thiserror::Error;

/// Failures split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input or usage. Exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// A mathematical requirement failed. Exit code 1.
    #[error("check failed: {0}")]
    Math(String),
}

impl CliError {
    /// Process exit code.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptySiteswap
            | Error::BadSiteswapToken(_)
            | Error::ThrowOutOfRange { .. }
            | Error::NotBijective { .. }
            | Error::Dimension(_)
            | Error::InvalidFrieze(_)
            | Error::InsufficientWindow { .. } => CliError::Input(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("malformed JSON: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
