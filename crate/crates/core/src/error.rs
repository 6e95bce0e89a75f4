use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the empty word has no period")]
    EmptyWord,
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("exponent {0} is below 1")]
    ExponentBelowOne(String),
    #[error("exponent {0} is not below (5+sqrt(5))/2")]
    ExponentTooLarge(String),
    #[error("factor length {len} exceeds word length {word_len}")]
    FactorTooLong { len: usize, word_len: usize },
    #[error("invalid binary symbol {0:?}")]
    InvalidSymbol(char),
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("invalid quadratic irrational {0:?}")]
    InvalidQuadratic(String),
    #[error("radicands differ: {0} and {1}")]
    RadicandMismatch(String, String),
    #[error("slope must be irrational and strictly between 0 and 1, got {0}")]
    InvalidSlope(String),
    #[error("intercept must lie in [0, 1), got {0}")]
    InvalidIntercept(String),
    #[error("invalid Pell representation {0:?}")]
    InvalidPell(String),
    #[error("argument must be positive")]
    ZeroArgument,
    #[error("{0} overflows 64 bits")]
    Overflow(&'static str),
    #[error("no balanced word of length {0} has two power endings")]
    NoGap(usize),
    #[error("a balanced word of length {len} contains no {e}-power: {witness}")]
    NotUniversal { e: String, len: usize, witness: String },
    #[error("a power occurrence ending at {end} with period {period} is not valid in this word")]
    InvalidOccurrence { end: usize, period: usize },
}
