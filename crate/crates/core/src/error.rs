use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension {0} is outside the supported range 1..=9")]
    UnsupportedDimension(u32),

    #[error("n must be at least 1")]
    ZeroTotal,

    #[error("symbol {symbol} at position {position} is outside the alphabet 0..={dim}")]
    InvalidAlphabet { symbol: u8, position: usize, dim: u8 },

    #[error("`{0}` is not a valid partition word")]
    InvalidWord(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Enumeration or graph construction ran past its resource budget.
    #[error("budget exceeded after {count} words")]
    BudgetExceeded { count: usize },

    /// A Hamiltonian-cycle search ran out of time without a verdict.
    #[error("search budget exhausted after {elapsed_ms} ms without a verdict")]
    SearchExhausted { elapsed_ms: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    #[error("sample value {0} is outside the support of the lognormal family")]
    Domain(f64),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("integer overflow while counting partitions of {0}")]
    Overflow(u32),
}
