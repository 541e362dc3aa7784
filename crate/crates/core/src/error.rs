use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input is larger than the configured enumeration bound.
    #[error("enumeration bound exceeded: {bound} is {actual}, limit is {limit}")]
    BoundExceeded {
        bound: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("composition {0} has a zero part")]
    NotStrong(String),

    #[error("parts of {0} are not weakly decreasing")]
    NotPartition(String),

    #[error("malformed composition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    /// An operation was called outside its stated domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("integer overflow in exact coefficient arithmetic")]
    Overflow,
}

impl Error {
    /// Resource-limit errors are reported separately from usage errors.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. } | Error::Overflow)
    }
}
