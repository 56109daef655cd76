use cyclosieve::CspError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Hypothesis(_) => 3,
            CliError::Internal(_) => 1,
            CliError::Config(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<CspError> for CliError {
    fn from(e: CspError) -> Self {
        match e {
            e if e.is_hypothesis() => CliError::Hypothesis(e.to_string()),
            CspError::Internal(m) => CliError::Internal(m),
            e => CliError::Config(e.to_string()),
        }
    }
}
