use thiserror::Error;

/// Errors produced by the library. Verification failures are reported as data
/// in [`crate::oracle::VerifyReport`], never through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid pattern {input:?}: {reason}")]
    PatternParse { input: String, reason: String },

    #[error("invalid partition {input:?}: {reason}")]
    PartitionParse { input: String, reason: String },

    #[error("invalid rational {0:?}")]
    RationalParse(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("n = {n} is too small (need n >= {min})")]
    TooSmall { n: usize, min: usize },

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("{count} products exceed the enumeration cap of {cap}")]
    ProductCap { count: u128, cap: u128 },

    #[error("generator set is empty but t = {0} >= 1")]
    EmptyGenerators(usize),

    #[error("unknown statistic {0:?} (expected peak, des, asc or a pattern)")]
    UnknownStatistic(String),

    #[error("({j},{ell}) is not one of the ten M-set classes")]
    InvalidClass { j: usize, ell: usize },

    #[error("symbol {0} of the template is missing from the relative order")]
    SymbolMismatch(String),

    #[error("{0} is not a classical pattern")]
    NotClassical(String),

    #[error("sample count must be at least 1")]
    NoSamples,
}

pub type Result<T> = std::result::Result<T, Error>;
