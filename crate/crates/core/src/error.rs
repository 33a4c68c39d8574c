use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size {size} exceeds the configured cap {cap}")]
    SizeCapExceeded { size: u128, cap: usize },

    #[error("polynomial {0:?} is not monic of degree >= 1")]
    NonMonicPolynomial(Vec<u64>),

    #[error("invalid modulus {0}")]
    InvalidModulus(u64),

    #[error("element {element} is out of range for a carrier of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("operands live over different rings")]
    RingMismatch,

    #[error("not a submodule: {0}")]
    NotASubmodule(String),

    #[error("ideal {0} is not prime")]
    NotPrime(String),

    #[error("set is not multiplicatively closed: {a} * {b} = {product} is missing")]
    NotMultiplicativelyClosed {
        a: String,
        b: String,
        product: String,
    },

    #[error("multiplicative set does not contain 1")]
    MissingUnit,

    #[error("not a Gabriel filter: {0}")]
    NotGabriel(String),

    #[error("meet of an empty list of filters")]
    EmptyMeet,

    #[error("unsupported ring map: {0}")]
    UnsupportedMap(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("chain is not ascending at position {position}")]
    NotAscending { position: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("tail discipline violated: {0}")]
    TailDisciplineViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),
}
