//! Error type shared by every crate in the workspace.

use thiserror::Error;

/// Failure categories surfaced by the precoding laboratory.
///
/// The CLI maps each category to a distinct process exit code, so keep the
/// variants coarse: one per failure family, with a message for detail.
#[derive(Debug, Error)]
pub enum Error {
    /// Inconsistent dimensions, invalid parameters, malformed configuration.
    #[error("configuration error: {0}")]
    Config(String),
    /// Channel matrix numerically rank deficient where full rank is required.
    #[error("singular channel: {0}")]
    SingularChannel(String),
    /// An iterative method or factorization failed to produce a usable result.
    #[error("numeric failure: {0}")]
    Numeric(String),
    /// Input is degenerate for the requested operation (e.g. normalizing an
    /// all-zero precoder).
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    /// A persisted file failed validation (bad magic, version, or checksum).
    #[error("file format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
