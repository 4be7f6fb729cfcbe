use thiserror::Error;

/// Errors produced by group construction and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("invalid group spec: {0}")]
    GroupSpec(String),

    #[error("generator {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("cannot parse word `{word}`: {reason}")]
    WordParse { word: String, reason: String },

    /// Matrix entries left the range of `i64`. Never silently wrapped.
    #[error("integer overflow in matrix arithmetic")]
    Overflow,

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid star: {0}")]
    InvalidStar(String),

    #[error("PhiCache is bound to a different star")]
    StarMismatch,

    #[error("`{0}` is not a twisted involution")]
    NotTwistedInvolution(String),

    #[error("parabolic subgroup is not finite within length cap {cap}")]
    ParabolicNotFinite { cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no preimage found within length {max_len}")]
    PreimageNotFound { max_len: usize },

    #[error("no factorization within exponent bound {bound}")]
    NoFactorization { bound: u32 },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
