use thiserror::Error;

/// Errors raised by the arithmetic layer and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("modulus must be monic of positive degree")]
    NonMonicModulus,
    #[error("modulus has zero constant term; q is not a unit modulo it")]
    ModulusHasZeroConstantTerm,
    #[error("denominator is not coprime to the modulus")]
    DenominatorNotCoprime,
    #[error("denominator is divisible by p = {0}")]
    DenominatorDivisibleByP(u64),
    #[error("zero modulus")]
    ZeroModulus,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("unknown family id `{0}`")]
    UnknownFamily(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
