use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("an alphabet needs at least one symbol")]
    InvalidAlphabet,
    #[error("symbol at position {0} is not in the alphabet")]
    SymbolNotInAlphabet(usize),
    #[error("q = {q} with {bits} bits per symbol does not fit into 64 bits")]
    QTooLarge { q: usize, bits: u32 },
    #[error("text must end with a unique sentinel that is smaller than every other symbol")]
    InvalidSentinel,
    #[error("index and text (or suffix array) do not belong together")]
    IndexTextMismatch,
    #[error("index {index} out of bounds for length {len}")]
    OutOfBounds { index: usize, len: usize },
    #[error("requested the {requested}-th bit but only {available} are available")]
    NotEnoughBits { requested: usize, available: usize },
    #[error("q-gram bucket table with {buckets} entries exceeds the cap of {cap}")]
    BucketTableTooLarge { buckets: u128, cap: usize },
    #[error("expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("pattern must not be empty")]
    EmptyPattern,
    #[error("pattern of length {len} exceeds the maximum of {max}")]
    PatternTooLong { len: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("format error on line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("unexpected end of input after line {line}")]
    UnexpectedEof { line: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
}
