use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different quadratic fields (sqrt({0}) vs sqrt({1}))")]
    MixedFields(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {0} is outside the open interval (0, 1)")]
    OutOfRange(String),
    #[error("no period found within {0} terms")]
    PeriodNotFound(usize),
    #[error("periodic word has no fixed point in (0, 1)")]
    NoRootInRange,
    #[error("index {index} is beyond the finite expansion of length {len}")]
    IndexBeyondFiniteExpansion { index: usize, len: usize },
    #[error("operation needs an infinite (eventually periodic) expansion")]
    FiniteExpansion,
    #[error("empty period")]
    EmptyPeriod,
    #[error("invalid expansion: {0}")]
    InvalidExpansion(String),
    #[error("target lies in a different quadratic field than alpha")]
    FieldMismatch,
    #[error("digit sequence is a truncated prefix, not eventually periodic")]
    NotPeriodic,
    #[error("digit sequence is not admissible: {0}")]
    Inadmissible(String),
    #[error("gamma = {m} + {l}*alpha lies in Z + alpha*Z")]
    LatticeGamma { m: String, l: String },
    #[error("requested {requested} bands, at most {max} are supported")]
    PrecisionExhausted { requested: usize, max: usize },
    #[error("search over {0} candidates exceeded the budget of {1} nodes")]
    SearchSpaceTooLarge(u128, u128),
    #[error("R = {0} is below 3")]
    RBelow3(u64),
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("bad family parameters: {0}")]
    BadFamilyParams(String),
    #[error("R = {0} is outside the reference table (2..=8)")]
    OutOfTable(u64),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
