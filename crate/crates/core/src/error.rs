//! Error type shared by every module in the crate.

use thiserror::Error;

/// All failure modes of the library.
///
/// `HypothesisViolated` and `NotApplicable` mark inputs outside a theorem's
/// scope (the computation itself is fine); everything else is a malformed
/// input or an arithmetic impossibility.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field with {size} elements exceeds the table limit of {limit}")]
    FieldTooLarge { size: u128, limit: u128 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not have the required multiplicative order")]
    WrongOrder,
    #[error("coefficient lies outside the target subfield")]
    CoefficientOutsideSubfield,
    #[error("n = {n} and q = {q} are not coprime")]
    NotCoprime { n: u64, q: u64 },
    #[error("designed distance {delta} outside [2, {max}]")]
    DeltaOutOfRange { delta: u64, max: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("inner code is not contained in the outer code")]
    NotNested,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
