use std::process::ExitCode;

use eulersum_core::algebra::AlgebraError;
use eulersum_core::expansion::ExpansionError;
use eulersum_core::index::IndexError;
use eulersum_core::numerics::NumericError;
use eulersum_core::reduction::TableError;
use thiserror::Error;

/// Failures with their documented exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Divergent(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Tables(String),
    #[error("{0}")]
    Capacity(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Divergent(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Tables(_) => 5,
            CliError::Capacity(_) => 6,
        }
    }

    pub fn exit(&self) -> ExitCode {
        ExitCode::from(self.exit_code())
    }
}

impl From<IndexError> for CliError {
    fn from(e: IndexError) -> Self {
        match e {
            IndexError::Divergent(_) => CliError::Divergent(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Divergent(_) => CliError::Divergent(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<ExpansionError> for CliError {
    fn from(e: ExpansionError) -> Self {
        match e {
            ExpansionError::Index(inner) => inner.into(),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<NumericError> for CliError {
    fn from(e: NumericError) -> Self {
        match e {
            NumericError::Tolerance { .. } => CliError::Parse(e.to_string()),
            NumericError::Capacity { .. } => CliError::Capacity(e.to_string()),
            NumericError::Divergent(_) => CliError::Divergent(e.to_string()),
            NumericError::SizeGuard(_) => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<TableError> for CliError {
    fn from(e: TableError) -> Self {
        CliError::Tables(e.to_string())
    }
}
