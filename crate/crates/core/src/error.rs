use thiserror::Error;

/// Errors raised by the library and surfaced by the command line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An enumeration or canonicalization bound was exceeded.
    #[error("capacity exceeded: {what} is limited to {cap}, got {requested}")]
    Capacity {
        what: &'static str,
        cap: usize,
        requested: usize,
    },

    #[error("malformed input at {path}: {message}")]
    Malformed { path: String, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn malformed(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Malformed {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
