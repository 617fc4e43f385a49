use std::fmt::Write as _;

use umbral::workspace::WorkspaceError;
use umbral::{Error, SyntaxError};

/// Failure of a command, classified by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input data: exit 1.
    Usage(String),
    /// Malformed expression: exit 1.
    Syntax { error: SyntaxError, source: String },
    /// Mathematical failure: exit 2.
    Math(Error),
    /// Workspace could not be read or written: exit 3.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Syntax { .. } => 1,
            CliError::Math(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn render(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Io(m) => format!("error: {m}"),
            CliError::Math(e) => format!("error: {e}"),
            CliError::Syntax { error, source } => {
                let mut out = format!("error: {error}");
                if let Some(line) = source.lines().nth(error.position.line - 1) {
                    let _ = write!(out, "\n  {line}\n  {}^", " ".repeat(error.position.column - 1));
                } else {
                    let _ = write!(out, "\n  \n  ^");
                }
                if !error.expected.is_empty() {
                    let _ = write!(out, "\nexpected one of: {}", error.expected.join(", "));
                }
                out
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::Syntax(error) => CliError::Syntax { error, source: String::new() },
            other => CliError::Math(other),
        }
    }
}

impl From<WorkspaceError> for CliError {
    fn from(e: WorkspaceError) -> CliError {
        match e {
            WorkspaceError::Math(m) => CliError::Math(m),
            other => CliError::Io(other.to_string()),
        }
    }
}
