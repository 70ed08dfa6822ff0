use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input; `position` is 1-based.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot split empty permutation")]
    EmptySplit,

    #[error("{what} {value} out of range 1..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The input is well formed but outside the domain of the operation,
    /// e.g. a permutation that does not avoid the required pattern.
    #[error("{0}")]
    Domain(String),

    #[error("cannot render letter {0}: the text syntax only has letters 1-9")]
    Render(u32),

    #[error("length {requested} exceeds the exhaustive-enumeration ceiling {ceiling}")]
    LimitExceeded { requested: usize, ceiling: usize },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    /// True for errors caused by well-formed input that the operation rejects
    /// on mathematical grounds (as opposed to malformed or out-of-range input).
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::EmptySplit)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
