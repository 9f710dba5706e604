use thiserror::Error;

/// Errors surfaced by instance loading, expression typing and evaluation.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two sub-expressions were composed along boundaries that do not match.
    #[error("boundary mismatch in {at}: {detail}")]
    BoundaryMismatch { at: String, detail: String },

    /// An expression referenced a 2-cell generator the instance does not declare.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// `Inverse` was applied to a value with no two-sided inverse in the model.
    #[error("value `{0}` is not invertible")]
    NotInvertible(String),

    /// A whiskering or tensor of generators has no entry in the instance tables.
    #[error("missing tensor table entry for {0}")]
    MissingTableEntry(String),

    /// Two 1-cell paths were composed end to start at different objects.
    #[error("non-composable cells: {0}")]
    NonComposable(String),

    /// A perturbation addressed a structure cell whose indices do not resolve.
    #[error("unknown perturbation location `{0}`")]
    UnknownLocation(String),

    /// An enumeration request exceeds the configured search bound.
    #[error("domain too large: {0}")]
    DomainTooLarge(String),

    /// A well-formed document that violates an instance invariant.
    #[error("invalid instance at {at}: {reason}")]
    Validation { at: String, reason: String },

    /// The document is not syntactically a valid instance file.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn validation(at: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Validation {
            at: at.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
