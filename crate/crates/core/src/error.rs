use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A partition was given with an increase somewhere.
    #[error("sequence {0:?} is not weakly decreasing")]
    NotPartition(Vec<usize>),

    /// Strip predicates need `mu` to sit inside `lambda`.
    #[error("{inner:?} is not contained in {outer:?}")]
    NotContained { inner: Vec<usize>, outer: Vec<usize> },

    #[error("size n+m = {size} exceeds the configured limit {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("{what} = {value} is out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    /// An object failed one of its class axioms. The string names the axiom.
    #[error("invalid {class}: {reason}")]
    Invalid { class: &'static str, reason: String },

    /// A map was applied outside of its domain (e.g. a non-invariant input).
    #[error("{map} is not defined here: {reason}")]
    Domain { map: &'static str, reason: String },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("closed form {0} produced a non-integral value")]
    NonIntegral(String),

    #[error("closed forms disagree: {0}")]
    Disagreement(String),
}

impl Error {
    pub(crate) fn invalid(class: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            class,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(map: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            map,
            reason: reason.into(),
        }
    }
}
