use thiserror::Error;

use crate::word::BinaryWord;

/// Errors raised by the word, distance, cube and counting operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid binary literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("word length {0} exceeds the supported maximum of {max}", max = BinaryWord::MAX_LEN)]
    WordTooLong(usize),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("swap S{position} is not applicable to {word}: symbols {position} and {next} are equal", next = position + 1)]
    SwapOnEqualSymbols { position: usize, word: BinaryWord },

    #[error("overlap length {l} out of range 1..={max} for {word}", max = word.len().saturating_sub(1))]
    OverlapLength { l: usize, word: BinaryWord },

    #[error("word {word} is too short: need length at least {min}")]
    WordTooShort { word: BinaryWord, min: usize },

    #[error("the avoided factor must be non-empty")]
    EmptyFactor,

    #[error("cube order must be in 1..={max}, got {order}")]
    InvalidOrder { order: usize, max: usize },

    #[error("{0} is not a vertex of the graph")]
    NotAVertex(BinaryWord),

    #[error("graph is disconnected: {u} cannot reach {v}")]
    Disconnected { u: BinaryWord, v: BinaryWord },

    #[error("argument {name} = {value} is outside the supported range {range}")]
    OutOfRange {
        name: &'static str,
        value: String,
        range: String,
    },

    #[error("graph was built over the {built} metric but checked against {requested}")]
    MetricMismatch {
        built: crate::cube::Metric,
        requested: crate::cube::Metric,
    },

    #[error("no minimal transformation found from {u} to {v} at distance {distance}")]
    NoMinimalTransformation {
        u: BinaryWord,
        v: BinaryWord,
        distance: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
