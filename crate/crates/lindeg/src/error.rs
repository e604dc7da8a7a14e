use thiserror::Error;

/// Errors surfaced by the library. Each variant has a stable machine-readable
/// code (see [`Error::code`]) used by the CLI.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank data is not realizable by any representation: {0}")]
    NonRealizable(String),
    #[error("dimension vectors do not match: {0}")]
    DimMismatch(String),
    #[error("vectors have different lengths: {0}")]
    LengthMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation requires vertex dimensions (n+1,...,n+1): {0}")]
    WrongDims(String),
    #[error("no embedding, the stratum is empty: {0}")]
    EmptyStratum(String),
    #[error("point is flat irreducible, no witness exists")]
    NoWitness,
    #[error("not a broken rhyme scheme: {0}")]
    InvalidScheme(String),
    #[error("scheme is not regular: {0}")]
    NotRegular(String),
    #[error("matrix shapes do not match: {0}")]
    ShapeMismatch(String),
    #[error("multiplicity went negative, diagram violates non-crossing rules: {0}")]
    NegativeMultiplicity(String),
    #[error("independent generic samples disagree: {0}")]
    GenericityFailure(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight has a negative coefficient: {0}")]
    NegativeCoefficient(String),
    #[error("enumeration exceeds the configured budget: {0}")]
    BudgetExceeded(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonRealizable(_) => "NonRealizable",
            Error::DimMismatch(_) => "DimMismatch",
            Error::LengthMismatch(_) => "LengthMismatch",
            Error::InvalidParams(_) => "InvalidParams",
            Error::WrongDims(_) => "WrongDims",
            Error::EmptyStratum(_) => "EmptyStratum",
            Error::NoWitness => "NoWitness",
            Error::InvalidScheme(_) => "InvalidScheme",
            Error::NotRegular(_) => "NotRegular",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NegativeMultiplicity(_) => "NegativeMultiplicity",
            Error::GenericityFailure(_) => "GenericityFailure",
            Error::NotReduced => "NotReduced",
            Error::NotDominant(_) => "NotDominant",
            Error::NegativeCoefficient(_) => "NegativeCoefficient",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::Malformed(_) => "Malformed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
