use thiserror::Error;

use crate::parser::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Reduction modulo `p` is undefined because `p` divides a denominator.
    #[error("bad prime {p}: divides the denominator of the coefficient {coefficient}{location}")]
    BadPrime { p: u64, coefficient: String, location: String },

    #[error("operands live in algebras with different numbers of variables ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operands have different coefficient domains ({left} vs {right})")]
    DomainMismatch { left: String, right: String },

    #[error("monomial has {got} exponents, expected {expected}")]
    KeyLength { expected: usize, got: usize },

    #[error("the zero element is not allowed here")]
    ZeroElement,

    #[error("operation requires positive characteristic")]
    WrongCharacteristic,

    #[error("operation is only defined for one variable, got {0}")]
    NotUnivariate(usize),

    #[error("the operators do not commute")]
    NotCommutingInput,

    #[error("the operator is central")]
    CentralInput,

    #[error("no fraction witness found within degree {0}")]
    NotFound(u32),

    #[error("operator is constant")]
    ConstantOperator,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
