use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("bit count mismatch: expected {expected}, got {got}")]
    BitLength { expected: usize, got: usize },
    #[error("unknown receiver `{0}`")]
    UnknownReceiver(String),
    #[error("invalid SNR grid: {0}")]
    InvalidGrid(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidConfiguration(msg.into())
}
