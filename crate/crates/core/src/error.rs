use num_bigint::BigInt;
use thiserror::Error;

/// Crate-wide error type. Variants carry the diagnostic payloads the
/// operations promise (parse offsets, remainders, offending indices, ...).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeGuard { degree: usize, max: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("operation undefined for constant polynomials")]
    ConstantPolynomial,

    #[error("division is inexact (remainder {remainder})")]
    InexactDivision { remainder: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("constant term is zero; reversal undefined")]
    ZeroConstantTerm,

    #[error("coefficient at odd index {index} is non-zero; no even part")]
    OddCoefficient { index: usize },

    #[error("{0} is not prime")]
    NotPrime(BigInt),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(BigInt, BigInt),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("minimal polynomial is reducible over Q")]
    ReducibleMinimalPolynomial,

    #[error("element belongs to a different number field")]
    FieldMismatch,

    #[error("attempt to invert zero field element")]
    ZeroInverse,

    #[error("no squarefree norm found within the shift budget ({0} shifts)")]
    ShiftBudgetExhausted(u32),

    #[error("family specification invalid: {}", violations.join("; "))]
    InvalidFamily { violations: Vec<String> },

    #[error("index {n} out of range: {reason}")]
    IndexOutOfRange { n: u64, reason: String },

    #[error("interpolation oracle over budget ({0} candidate tuples)")]
    OracleBudget(u64),

    #[error("degree {0} exceeds the interpolation oracle cap of {1}")]
    OracleDegreeCap(usize, usize),

    #[error("certificate failed validation: {0}")]
    CertificateInvalid(String),

    #[error("internal contract violated: {0}")]
    ContractViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
