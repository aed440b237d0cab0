use thiserror::Error;

use crate::ideal::IdealKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set has {0} variables, at most 64 are supported")]
    GroundTooLarge(u32),
    #[error("ground set must contain at least one variable")]
    EmptyGround,
    #[error("support {support:#x} does not fit a ground set of {len} variables")]
    SupportOutOfRange { support: u64, len: u32 },
    #[error("monomials live on different ground sets")]
    MixedGroundSets,
    #[error("operation needs a proper ideal, got the {0} ideal")]
    NotProper(IdealKind),
    #[error("{0:#x} is not a face of the complex")]
    NotAFace(u64),
    #[error("reduced homology of the void complex is undefined")]
    VoidComplex,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("the Hochster oracle handles at most {limit} variables, got {len}")]
    GroundTooLargeForOracle { len: u32, limit: u32 },
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("the quotient ring is not Cohen-Macaulay")]
    NotCm,
    #[error("{0} generators are too many to expand")]
    TooManyGenerators(u128),
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("cannot parse monomial {0:?}")]
    ParseMonomial(String),
}
