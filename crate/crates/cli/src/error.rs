use std::process::ExitCode;

use rotorpath_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable file, malformed JSON, or values that do not fit the schema.
    #[error("schema error: {0}")]
    Schema(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Failed(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Budget(_) => 4,
        })
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidInstance(_)
            | Error::NonStopping { .. }
            | Error::SinkWithOutArc { .. }
            | Error::EmptyRotorOrder { .. }
            | Error::BadRotorOrder { .. } => CliError::Invalid(msg),
            Error::StepBudgetExceeded { .. } => CliError::Budget(msg),
            Error::VertexOutOfRange { .. }
            | Error::ArcOutOfRange { .. }
            | Error::RotorOutOfRange { .. }
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange(_)
            | Error::NegativeInput { .. }
            | Error::SinkVertex { .. } => CliError::Schema(msg),
            _ => CliError::Failed(msg),
        }
    }
}
