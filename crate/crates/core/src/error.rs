use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a fundamental discriminant: {0}")]
    NotFundamentalDiscriminant(i64),

    #[error("discriminant {disc} exceeds the supported maximum {max}")]
    DiscriminantTooLarge { disc: i64, max: i64 },

    /// The character does not satisfy the preconditions of an L(1) route.
    #[error("unsupported character: {0}")]
    UnsupportedCharacter(String),

    /// A numerical cross-check exceeded its tolerance.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
