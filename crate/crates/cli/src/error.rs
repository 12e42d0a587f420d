use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("evaluation: {0}")]
    Domain(String),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io { .. } => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl From<certifier::CertError> for CliError {
    fn from(e: certifier::CertError) -> Self {
        use certifier::CertError::*;
        match e {
            InvalidSpec(_) | Parse { .. } => CliError::Config(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<reduction::ReductionError> for CliError {
    fn from(e: reduction::ReductionError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<hill_core::HillError> for CliError {
    fn from(e: hill_core::HillError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<oracle::OracleError> for CliError {
    fn from(e: oracle::OracleError) -> Self {
        match e {
            oracle::OracleError::InvalidArgument(m) => CliError::Config(m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
