use thiserror::Error;

use crate::combinatorics::Node;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("quantum characteristic e = {0} is not supported (need e >= 3)")]
    UnsupportedE(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not standard")]
    NotStandard,

    #[error("not a permutation of 1..{0}")]
    InvalidPermutation(usize),

    #[error("node {0} is not a removable node")]
    NotRemovable(Node),

    #[error("node {0} is not a Garnir node")]
    NotGarnir(Node),

    #[error("hook shape d = {d}, k = {k} is invalid (need 1 <= d <= 63 and k <= d - 1)")]
    InvalidHook { d: usize, k: usize },

    #[error("partition has {parts} parts but at least {needed} are required")]
    TooFewParts { parts: usize, needed: usize },

    #[error("partition of {mu} does not match hook of {d}")]
    SizeMismatch { mu: usize, d: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("segment direction mismatch: {0}")]
    SegmentDirection(&'static str),

    #[error("generator index {index} out of range for d = {d}")]
    GeneratorOutOfRange { index: usize, d: usize },

    #[error("malformed generator token `{0}`")]
    MalformedToken(String),

    #[error("sequence is not weakly decreasing with positive entries: {0:?}")]
    NotDecreasing(Vec<u64>),

    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),

    #[error("homomorphism space is zero; no degree to report")]
    ZeroHom,

    #[error("operation requires {0}")]
    Precondition(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
