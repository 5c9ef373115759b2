//! Error types shared across the crate.

use std::path::PathBuf;

/// Crate-wide error type.
///
/// The variants map onto the process exit codes used by the CLI:
/// `Config` is a usage problem, `Data`/`Checkpoint`/`Io` are data problems,
/// `Numeric` is a numeric failure during training.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("data error in {path} at byte {offset}: {msg}")]
    Data {
        path: PathBuf,
        offset: u64,
        msg: String,
    },

    #[error("checkpoint error at byte {offset}: {msg}")]
    Checkpoint { offset: u64, msg: String },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
