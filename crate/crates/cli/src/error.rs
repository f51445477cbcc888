use std::fmt;
use std::io;

/// Errors surfaced by the command-line tool, mapped onto exit codes:
/// 2 for bad input, 3 for size limits, 4 for an internal validation
/// failure (a bug, never expected).
#[derive(Debug)]
pub enum CliError {
    Io(io::Error),
    Json(serde_json::Error),
    Model(twobar_core::Error),
    BadClass(String),
    BadAlgo(String),
    BadOracle(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(twobar_core::Error::SizeLimit { .. }) => 3,
            CliError::Internal(_) => 4,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "invalid file: {e}"),
            CliError::Model(e) => write!(f, "{e}"),
            CliError::BadClass(s) => write!(f, "{s}"),
            CliError::BadAlgo(s) => write!(
                f,
                "unknown algorithm {s:?} (use a1, a2, matching or baseline)"
            ),
            CliError::BadOracle(s) => {
                write!(
                    f,
                    "unknown oracle mode {s:?} (use bcpp1, bcpp1-bf, sequence or general)"
                )
            }
            CliError::Internal(s) => write!(f, "internal validation failure: {s}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl From<twobar_core::Error> for CliError {
    fn from(e: twobar_core::Error) -> Self {
        CliError::Model(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
