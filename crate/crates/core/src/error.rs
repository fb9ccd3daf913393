use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension {0}: {1}")]
    InvalidDimension(usize, &'static str),

    #[error("word is not a permutation of 1..={n}: {reason}")]
    InvalidWord { n: usize, reason: String },

    #[error("generator index {index} out of range 2..={n}")]
    GeneratorIndex { index: usize, n: usize },

    #[error("swap position {index} out of range 2..={n}")]
    SwapPosition { index: usize, n: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("cyclic shift out of range: ell={ell}, m={m}, n={n}")]
    ShiftOutOfRange { ell: usize, m: usize, n: usize },

    #[error("digit {digit} for coordinate {coord} exceeds radix bound {max}")]
    DigitOutOfRange { coord: usize, digit: u8, max: u8 },

    #[error("graph parameter out of range: {0}")]
    GraphParameter(String),

    #[error("vertices are not adjacent in {kind}: {detail}")]
    NotAdjacent { kind: String, detail: String },

    #[error("words differ in {0} positions; not a rule-R unit difference")]
    NotUnitDifference(usize),

    #[error("constructive route did not reach its target: {0}")]
    RouteMismatch(String),

    #[error("dimension {n} exceeds cap {cap}; raise the cap explicitly")]
    DimensionCapExceeded { n: usize, cap: usize },

    #[error("unsupported guest/host combination: {0}")]
    UnsupportedCombination(String),

    #[error("unmapped guest vertex {0}")]
    UnmappedVertex(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported format version {found} (reader supports major {supported})")]
    FormatVersion { found: String, supported: u32 },

    #[error("malformed document: {0}")]
    MalformedDocument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
