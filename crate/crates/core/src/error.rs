use thiserror::Error;

/// Errors raised by semigroup and semimodule computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the complement would be infinite")]
    NotCofinite(u64),
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAMember(i64),
    #[error("{0} is not a gap of the semigroup")]
    NotAGap(i64),
    #[error("the type of the naturals is undefined")]
    NaturalsHasNoType,
    #[error("operation is undefined for the naturals")]
    NaturalsUnsupported,
    #[error("{0} and {1} are not coprime generators with 2 <= alpha < beta")]
    NotCoprime(u64, u64),
    #[error("no semimodule has {0} minimal generators")]
    NoSuchSemimodule(usize),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("conductor {0} exceeds the supported window")]
    TooLarge(u64),
    #[error("invalid semigroup spec {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("node budget of {budget} exhausted after visiting {visited} nodes (per-genus counts so far: {per_genus:?})")]
    ResourceLimit {
        budget: u64,
        visited: u64,
        per_genus: Vec<u64>,
    },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Stable variant name, used by the CLI when reporting domain errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::NonPositiveGenerator(_) => "NonPositiveGenerator",
            Error::NotCofinite(_) => "NotCofinite",
            Error::NotAMember(_) => "NotAMember",
            Error::NotAGap(_) => "NotAGap",
            Error::NaturalsHasNoType => "NaturalsHasNoType",
            Error::NaturalsUnsupported => "NaturalsUnsupported",
            Error::NotCoprime(..) => "NotCoprime",
            Error::NoSuchSemimodule(_) => "NoSuchSemimodule",
            Error::Overflow(_) => "Overflow",
            Error::TooLarge(_) => "TooLarge",
            Error::Parse { .. } => "Parse",
            Error::ResourceLimit { .. } => "ResourceLimit",
            Error::InternalInconsistency(_) => "InternalInconsistency",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn inconsistent(msg: impl Into<String>) -> Error {
    Error::InternalInconsistency(msg.into())
}
