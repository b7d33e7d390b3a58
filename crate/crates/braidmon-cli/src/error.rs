use std::path::PathBuf;

use thiserror::Error;

/// A syntax error in one of the text formats.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    /// 1-based line.
    pub line: usize,
    /// 1-based column, in characters.
    pub col: usize,
    /// What went wrong.
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError { line, col, message: message.into() }
    }
}

/// Everything the command layer can report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("unknown fixture {0:?}; try `braidmon fixtures list`")]
    UnknownFixture(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] braidmon::Error),
}

impl CliError {
    /// Exit status: 2 for bad input, 1 for a failed mathematical step.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                braidmon::Error::Unliftable(_)
                | braidmon::Error::RelatorNotKilled(_)
                | braidmon::Error::Disconnected
                | braidmon::Error::Overflow,
            ) => 1,
            _ => 2,
        }
    }
}
