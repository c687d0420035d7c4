use qdiff::{CoveringError, PatternError, StrataError, SurfaceError};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: syntax, schema, or parameters out of range.
    #[error("{0}")]
    Invalid(String),
    /// The queried stratum is empty; the value is the JSON body to print.
    #[error("stratum is empty")]
    Empty(Value),
    /// A consistency check inside the library failed.
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Empty(_) => 3,
            CliError::Internal(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<PatternError> for CliError {
    fn from(e: PatternError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<StrataError> for CliError {
    fn from(e: StrataError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<CoveringError> for CliError {
    fn from(e: CoveringError) -> Self {
        match e {
            CoveringError::InternalFormulaMismatch { .. }
            | CoveringError::GaussBonnetMismatch { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::Covering(inner) => inner.into(),
            SurfaceError::BadEulerCharacteristic(_) => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}
