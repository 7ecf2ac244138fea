use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("field of size {size} exceeds the size guard of {limit} elements")]
    FieldTooLarge { size: u128, limit: u64 },

    #[error("element belongs to a different field tower")]
    TowerMismatch,

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("element is not in the subfield F_{q}")]
    NotInSubfield { q: u64 },

    #[error("argument must be nonzero")]
    ZeroArgument,

    #[error("cyclotomic operands use different roots of unity (p = {left} vs p = {right})")]
    CyclotomicMismatch { left: u32, right: u32 },

    #[error("cyclotomic integer {0} is not a rational integer")]
    NotRationalInteger(String),

    #[error("gcd(m, q-1) = {gcd} for q = {q}, m = {m}; the Hamming code is not cyclic and the requested operation requires gcd(m, q-1) = 1")]
    GcdPrecondition { q: u64, m: u32, gcd: u64 },

    #[error("work bound exceeded: {required} > {bound} ({what})")]
    WorkBound { what: String, required: u128, bound: u128 },

    #[error("inexact division: {context}")]
    InexactDivision { context: String },

    #[error("negative count at weight {index}: {value}")]
    NegativeCount { index: usize, value: String },

    #[error("inconsistent weight distribution: {0}")]
    InconsistentDistribution(String),

    #[error("distribution parameters do not match: {0}")]
    ParameterMismatch(String),
}

impl Error {
    /// Work-bound and size-guard refusals are reported as skips rather than failures.
    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::WorkBound { .. } | Error::FieldTooLarge { .. })
    }

    /// Caller asked for something outside an operation's contract.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::NotPrimePower(_)
                | Error::InvalidParameter(_)
                | Error::GcdPrecondition { .. }
                | Error::NotInSubfield { .. }
                | Error::ZeroArgument
                | Error::TowerMismatch
                | Error::ZeroInverse
                | Error::CyclotomicMismatch { .. }
                | Error::ParameterMismatch(_)
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not-prime",
            Error::NotPrimePower(_) => "not-prime-power",
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::FieldTooLarge { .. } => "field-too-large",
            Error::TowerMismatch => "tower-mismatch",
            Error::ZeroInverse => "zero-inverse",
            Error::NotInSubfield { .. } => "not-in-subfield",
            Error::ZeroArgument => "zero-argument",
            Error::CyclotomicMismatch { .. } => "cyclotomic-mismatch",
            Error::NotRationalInteger(_) => "not-rational-integer",
            Error::GcdPrecondition { .. } => "gcd-precondition",
            Error::WorkBound { .. } => "work-bound",
            Error::InexactDivision { .. } => "inexact-division",
            Error::NegativeCount { .. } => "negative-count",
            Error::InconsistentDistribution(_) => "inconsistent-distribution",
            Error::ParameterMismatch(_) => "parameter-mismatch",
        }
    }
}
