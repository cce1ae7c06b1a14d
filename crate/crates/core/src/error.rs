use thiserror::Error;

/// Errors raised by the algorithms and the instance parser.
///
/// Infeasibility is never an error; every solver reports it in its result type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input does not describe the structure it claims to (cycles, wrong edge count, ...).
    #[error("malformed input: {0}")]
    Malformed(String),
    /// A well-formed input violating an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The instance exceeds a hard size cap of an exponential algorithm or oracle.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    /// A caller-supplied intermediate (a flow, a witness) breaks its contract.
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}
