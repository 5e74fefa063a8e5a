use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} outside ambient range [1, {ambient}]")]
    IndexOutOfRange { index: usize, ambient: usize },

    #[error("ambient {0} exceeds the supported maximum of 32 variables")]
    AmbientTooLarge(usize),

    #[error("support must be strictly increasing: {0:?}")]
    NotStrictlyIncreasing(Vec<usize>),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("{op}: precondition violated: {reason}")]
    Precondition { op: &'static str, reason: String },

    #[error("invalid lexsegment spec: {0}")]
    InvalidSpec(String),

    #[error("ideal is not t-spread strongly stable{reversed}: {witness}", reversed = if *.reversed { " (reversed variable order)" } else { "" })]
    NotStronglyStable { reversed: bool, witness: String },

    #[error("the zero ideal has no gcd")]
    ZeroIdeal,

    #[error("generator partition invalid: {0}")]
    InvalidPartition(String),

    #[error("ambient {n} exceeds oracle cap {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("closed form produced a redundant prime: {0}")]
    RedundantPrime(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(op: &'static str, reason: impl Into<String>) -> Error {
    Error::Precondition {
        op,
        reason: reason.into(),
    }
}
