use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("nerve of an empty cover is undefined")]
    EmptyCover,

    #[error("subcomplex is not contained in the ambient complex")]
    NotSubcomplex,

    #[error("ambient vertex counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("coefficients must be a field, got {0}")]
    NotAField(String),

    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),

    #[error("unknown coefficient spec `{0}` (expected z, q, f2, f3 or fp:<prime>)")]
    UnknownField(String),

    #[error("{n} vertices exceeds the configured cap of {cap} for full Hochster tables")]
    TooManyVertices { n: usize, cap: usize },

    #[error("exhaustive enumeration supports 1..=5 vertices, got {0}; use random sampling")]
    ExhaustiveTooLarge(usize),

    #[error("the void complex is not allowed here")]
    VoidComplex,

    #[error("prime family is not an antichain: {0} contains {1}")]
    NotAntichain(String, String),

    #[error("generator list is invalid: {0}")]
    InvalidGenerators(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("line {line}: {message} (at `{token}`)")]
    Parse { line: usize, token: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
