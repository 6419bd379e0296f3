use thiserror::Error;

/// Errors raised by the codecs, the grid tools and the file parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid level count q={q}: expected a power of two in {min}..={max}")]
    InvalidLevelCount { q: u32, min: u32, max: u32 },

    #[error("level {level} out of range for q={q}")]
    LevelOutOfRange { level: u32, q: u32 },

    #[error("invalid code length m={0}: must be at least 2")]
    InvalidCodeLength(usize),

    #[error("invalid RLL block parameters n={n} k={k}: need 2^k <= F(n-1)")]
    InvalidRllParams { n: usize, k: usize },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: String, limit: String },

    #[error("word of length {found} does not match code length {expected}")]
    WordLength { expected: usize, found: usize },

    #[error("forbidden pattern at bit {position}")]
    ForbiddenPattern { position: usize },

    #[error("page length {len} is not a multiple of the block length {block}")]
    BadPageLength { len: usize, block: usize },

    #[error("corrupt bridge after block {block}")]
    CorruptBridge { block: usize },

    #[error("not a codeword: {0}")]
    NotACodeword(String),

    #[error("invalid codeword in block {block}")]
    InvalidCodeword { block: usize },

    #[error("ragged grid: row {row} has {found} cells, expected {expected}")]
    RaggedGrid {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("size mismatch for {what}: expected {expected}, got {found}")]
    SizeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
