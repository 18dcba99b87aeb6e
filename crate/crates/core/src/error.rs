use crate::id::{ids_csv, Id};

/// Library-wide error type. The CLI maps these onto exit codes:
/// bad or unsupported input exits 2, a refused budget exits 3.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("not well-founded: strict cycle {}", ids_csv(.cycle))]
    NotWellFounded { cycle: Vec<Id> },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
