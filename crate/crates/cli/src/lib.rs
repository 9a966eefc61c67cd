//! Command line front end for `smallsub-core`: input formats, versioned JSON
//! reports and the acceptance suite.

pub mod acceptance;
pub mod app;
pub mod input;
pub mod report;

use serde_json::{json, Value};
use smallsub_core::{Error, ParseError};

pub use app::{run, Execution};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{context}: {error}")]
    Parse { context: String, error: ParseError },
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2 for budget exhaustion, 3 for unparsable input, 4 for anything else
    /// the operations reject.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Core(Error::Parse(_)) => 3,
            CliError::Core(Error::BudgetExceeded(_)) => 2,
            CliError::Io(_) | CliError::Core(_) => 4,
        }
    }

    pub fn to_json(&self) -> Value {
        let kind = match self {
            CliError::Parse { .. } | CliError::Core(Error::Parse(_)) => "parse",
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Core(Error::BudgetExceeded(_)) => "budget",
            CliError::Core(_) => "rejected",
        };
        let position = match self {
            CliError::Parse { error, .. } | CliError::Core(Error::Parse(error)) => Some(error.position),
            _ => None,
        };
        json!({ "kind": kind, "message": self.to_string(), "position": position })
    }
}
