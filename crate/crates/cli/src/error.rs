use std::fmt;
use std::path::Path;

use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(rostfix::Error),
    InFile { path: String, inner: Box<CliError> },
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn in_file(self, path: &Path) -> Self {
        CliError::InFile {
            path: path.display().to_string(),
            inner: Box::new(self),
        }
    }

    fn root(&self) -> &CliError {
        match self {
            CliError::InFile { inner, .. } => inner.root(),
            e => e,
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self.root() {
            CliError::Core(e) if e.is_budget() => ErrorKind::Budget,
            CliError::Core(rostfix::Error::Internal(_)) => ErrorKind::Internal,
            _ => ErrorKind::Input,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind() {
            ErrorKind::Budget => EXIT_BUDGET,
            ErrorKind::Internal => EXIT_MISMATCH,
            ErrorKind::Input => EXIT_INPUT,
        }
    }
}

impl From<rostfix::Error> for CliError {
    fn from(e: rostfix::Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::InFile { path, inner } => write!(f, "{path}: {inner}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Input,
    Budget,
    Internal,
}
