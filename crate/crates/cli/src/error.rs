use std::fmt;
use std::process::ExitCode;

use thiserror::Error;

/// Exit status 2 for anything the user has to fix, 1 for a runtime failure
/// such as a rejected signature or an exhausted search.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn input(e: impl fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }

    pub fn failure(e: impl fmt::Display) -> Self {
        CliError::Failure(e.to_string())
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Input(_) => ExitCode::from(2),
            CliError::Failure(_) => ExitCode::from(1),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
