use thiserror::Error;

/// Errors raised by the algebra, analysis and parsing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("the identity word has no lowest term")]
    NoLowestTerm,

    #[error("operation is undefined on the identity element")]
    TrivialElement,

    #[error("element is not positive in the bi-order")]
    NotPositive,

    #[error("premise unmet: {0}")]
    PremiseUnmet(String),

    #[error("degree {degree} outside supported range 1..={cap}")]
    DegreeOutOfRange { degree: usize, cap: usize },

    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("map has no inverse images; negative powers are unavailable")]
    MissingInverse,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not squarefree")]
    NonSquarefree,

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("inconsistent premises: {0}")]
    Inconsistent(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown word token {0:?}")]
    BadToken(String),

    #[error("no corpus entry named {0:?}")]
    UnknownCorpusEntry(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
