use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("ring has {cardinality} elements, above the cap of {cap}")]
    CardinalityCap { cardinality: u128, cap: u64 },

    #[error("value {value} out of range: {message}")]
    OutOfRange { value: String, message: String },

    #[error("element belongs to a different ring")]
    ForeignElement,

    #[error("element {0} is not a unit")]
    NotAUnit(String),

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis bdb = bac, dbd = acd fails for ({0})")]
    Hypothesis(String),

    /// Several distinct inverses satisfy a predicate that has at most one solution.
    #[error("uniqueness violation for a = {a}: candidates {candidates:?}")]
    UniquenessViolation { a: String, candidates: Vec<String> },

    /// A theorem-level identity failed. Always a bug somewhere.
    #[error("theorem falsified: {0}")]
    Falsified(String),
}

impl Error {
    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            offset,
            message: message.into(),
        }
    }

    /// True for errors that indicate a counterexample to a proved statement.
    pub fn is_fault(&self) -> bool {
        matches!(
            self,
            Error::UniquenessViolation { .. } | Error::Falsified(_)
        )
    }
}
