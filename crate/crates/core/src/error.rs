use thiserror::Error;

/// Failures reported by generator and sampler operations.
///
/// A failing call on an [`Rng`](crate::Rng) also stores the rendered message in the
/// generator's error slot, retrievable with [`Rng::last_error`](crate::Rng::last_error).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown engine '{0}'")]
    UnknownEngine(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("jump unsupported: {0}")]
    JumpUnsupported(String),
    #[error("stream selection unsupported for engine {0}")]
    StreamUnsupported(&'static str),
    #[error("{0} is only available for engine {1}")]
    WrongEngine(&'static str, &'static str),
    #[error("stream exhausted")]
    StreamExhausted,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("covariance matrix is not positive semidefinite: {0}")]
    NotPositiveSemidefinite(String),
    #[error("serialized state is truncated")]
    Truncated,
    #[error("serialized state has a bad magic number")]
    BadMagic,
    #[error("unsupported serialized state version {0}")]
    UnsupportedVersion(u16),
    #[error("serialized state checksum mismatch")]
    ChecksumMismatch,
    #[error("malformed data: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid_param(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
