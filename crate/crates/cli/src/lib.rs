//! Command-line front end: the `key = value` specification format, output
//! rendering, and command handlers. The binary in `main.rs` is a thin
//! dispatcher over [`run`].

pub mod output;
pub mod run;
pub mod spec_file;

use std::path::PathBuf;
use thiserror::Error;

/// Exit codes: 0 success, 1 negative verdict, 2 invalid input, 3 budget
/// exceeded. Negative verdicts are returned as `Ok(1)` by the handlers;
/// these errors cover codes 2 and 3.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("invalid input: {message}")]
    Semantic { message: String },
    #[error("cannot read {path}: {message}", path = .path.display())]
    Io { path: PathBuf, message: String },
    #[error("budget exceeded: {message}")]
    Budget { message: String },
}

impl CliError {
    pub fn semantic(err: impl std::fmt::Display) -> Self {
        CliError::Semantic {
            message: err.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Semantic { .. } | CliError::Io { .. } => 2,
            CliError::Budget { .. } => 3,
        }
    }
}
