use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operands live in different algebras: {0}")]
    AlgebraMismatch(String),

    #[error("basis index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("expected a homogeneous class of degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },

    #[error("element is not in the subring generated by symmetrized classes: {0}")]
    NotInChiSubring(String),

    #[error("expected an integral value, got {0}")]
    NonIntegral(String),

    #[error("bilinear form is not alternating: {0}")]
    NotAlternating(String),

    #[error("ill-formed chain complex: {0}")]
    IllFormedComplex(String),

    #[error("work estimate {estimate} exceeds the cap {cap}")]
    WorkCapExceeded { estimate: u128, cap: u128 },
}
