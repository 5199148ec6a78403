use std::path::PathBuf;

use sizeramsey::bounds::BoundsError;
use sizeramsey::dfs::DfsError;
use sizeramsey::expansion::ExpansionError;
use sizeramsey::format::FormatError;
use sizeramsey::model::ModelError;
use sizeramsey::oracle::OracleError;
use sizeramsey::GraphError;
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_OUT_OF_REGIME: u8 = 2;
pub const EXIT_CAP_EXCEEDED: u8 = 3;
pub const EXIT_INVARIANT: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unreadable input files, and I/O failures.
    #[error("{0}")]
    Usage(String),
    #[error("out of regime: {0}")]
    OutOfRegime(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::OutOfRegime(_) => EXIT_OUT_OF_REGIME,
            CliError::CapExceeded(_) => EXIT_CAP_EXCEEDED,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::ProbabilityAboveOne { .. } => CliError::OutOfRegime(e.to_string()),
            ModelError::RetryLimitExhausted { .. } => CliError::CapExceeded(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::CapExceeded { .. } | OracleError::NoArrowingGraph { .. } => {
                CliError::CapExceeded(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ExpansionError> for CliError {
    fn from(e: ExpansionError) -> Self {
        match e {
            ExpansionError::CapExceeded { .. } => CliError::CapExceeded(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<DfsError> for CliError {
    fn from(e: DfsError) -> Self {
        match e {
            DfsError::NoPhaseLog => CliError::Invariant(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::Usage(e.to_string())
    }
}
