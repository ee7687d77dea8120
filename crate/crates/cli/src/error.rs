use ics_core::bijections::BijectionError;
use ics_core::paths::PathError;
use ics_core::poset::PosetError;
use ics_core::series::SeriesError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad poset spec, malformed input set or path, or a set that is not interval-closed.
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    ScaleExceeded(String),
    #[error("{0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::ScaleExceeded(_) => 3,
            CliError::Verification(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> Self {
        match e {
            PosetError::ScaleExceeded { .. } => CliError::ScaleExceeded(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<PathError> for CliError {
    fn from(e: PathError) -> Self {
        match e {
            PathError::ScaleExceeded { .. } => CliError::ScaleExceeded(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::OrderExceeded { .. } | SeriesError::BudgetExceeded { .. } => {
                CliError::ScaleExceeded(e.to_string())
            }
            SeriesError::InvalidArgument(_) => CliError::Invalid(e.to_string()),
            // anything else means the engine itself produced an inconsistent result
            _ => CliError::Verification(e.to_string()),
        }
    }
}

impl From<BijectionError> for CliError {
    fn from(e: BijectionError) -> Self {
        match e {
            BijectionError::Poset(e) => e.into(),
            BijectionError::Path(e) => e.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Invalid(format!("malformed JSON: {e}"))
    }
}
