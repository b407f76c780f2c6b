use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition of an operation was not met by its inputs.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// Text input could not be read as a partition.
    #[error("parse error: {0}")]
    Parse(String),

    /// The input parsed but is not a member of the required class.
    #[error("{0}")]
    NotMember(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }
}
