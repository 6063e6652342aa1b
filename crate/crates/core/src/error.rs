use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..{n}: {word}")]
    NotAPermutation { word: String, n: usize },

    #[error("digit {digit} at position {position} exceeds bound {bound} ({kind} word)")]
    DigitOutOfRange {
        kind: &'static str,
        position: usize,
        digit: u32,
        bound: u32,
    },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("position {position} outside 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("word must not be empty")]
    EmptyWord,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("statistic Sc is only tabulated for n = 4 (got n = {0})")]
    ScUnavailable(usize),

    #[error("fixture row {row} ({sigma}): {message}")]
    Fixture {
        row: usize,
        sigma: String,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
