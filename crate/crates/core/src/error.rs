use thiserror::Error;

use crate::exact::QLaurent;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("variable mismatch: cannot combine polynomials in `{0}` and `{1}`")]
    VariableMismatch(char, char),

    #[error("polynomial division leaves nonzero remainder {remainder}")]
    NonzeroRemainder { remainder: QLaurent },

    #[error("cannot evaluate a negative power at zero")]
    NegativePowerAtZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vanishing factor in negative-order Pochhammer symbol at s = {0}")]
    VanishingFactor(i64),

    #[error("coefficient of x^{index} requested from a series known only to order {order}")]
    BeyondOrder { index: usize, order: usize },

    #[error("series has zero constant term")]
    ZeroConstantTerm,

    #[error("series constant term must be 1")]
    ConstantTermNotOne,

    #[error("series constant term must be 0")]
    ConstantTermNotZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{a} is not coprime to {m}")]
    NotCoprime { a: u64, m: u64 },

    #[error("non-integer coefficient in {0}")]
    NonIntegerCoefficient(String),

    #[error("formal sum does not converge: {0}")]
    NonConvergent(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}
