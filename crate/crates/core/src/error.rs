use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("invalid character {found:?} at index {index}")]
    InvalidChar { index: usize, found: char },
    #[error("word length {len} exceeds the cap of {cap}")]
    TooLong { len: usize, cap: usize },
    #[error("parameter m = {m} out of range 1..={n}")]
    MOutOfRange { m: usize, n: usize },
    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("prefix length j = {j} out of range {lo}..={hi}")]
    JOutOfRange { j: usize, lo: usize, hi: usize },
    #[error("size {size} exceeds the configured cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("invalid encoded pair: {0}")]
    InvalidPair(String),
    #[error("composition part {part} is not 1 or {expected}")]
    InvalidSnakePart { part: usize, expected: usize },
    #[error("ones at {first} and {second} are within distance {m}")]
    NotSpread {
        first: usize,
        second: usize,
        m: usize,
    },
    #[error("run of {m_plus_one} ones starting at {start}")]
    LongRun { start: usize, m_plus_one: usize },
    #[error("orbit exceeded {limit} steps without returning")]
    OrbitOverflow { limit: usize },
    #[error("negative value after shifting multiset element {0}")]
    NegativeShift(usize),
    #[error("orbit board inconsistent at row {row}, column {col}: {reason}")]
    Board {
        row: usize,
        col: usize,
        reason: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
