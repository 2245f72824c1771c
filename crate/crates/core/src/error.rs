use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported range (< 2^32)")]
    PrimeTooLarge(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("modulus is not irreducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("scalar is not an element of {0}")]
    NotInField(String),
    #[error("Frobenius is undefined over the rationals")]
    NotFinite,

    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid cyclic quotient: {0}")]
    InvalidQuotient(String),
    #[error("generator {generator} is not homogeneous: monomials {first} and {second} have different weights")]
    NonHomogeneous {
        generator: usize,
        first: String,
        second: String,
    },
    #[error("generator {0} is not homogeneous for the standard grading")]
    NotDegreeHomogeneous(usize),

    #[error("Groebner budget of {limit} S-pairs exceeded")]
    Budget { limit: usize },
    #[error("point scan budget of {limit} candidates exceeded")]
    ScanBudget { limit: u128 },
    #[error("ideal is not zero-dimensional (Krull dimension {dim})")]
    NotZeroDimensional { dim: i64 },
    #[error("the origin does not lie on the scheme")]
    OriginNotOnScheme,
    #[error("point does not lie on the scheme")]
    PointNotOnScheme,
    #[error("point is not fixed by the group")]
    PointNotFixed,
    #[error("fixed locus is not finite")]
    FixedLocusNotFinite,
    #[error("fixed locus is not empty")]
    FixedLocusNonEmpty,
    #[error("operation requires {0}")]
    Unsupported(String),

    #[error("schema error at {}: {message}", if pointer.is_empty() { "/" } else { pointer })]
    Schema { pointer: String, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the error is a resource-budget failure rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::ScanBudget { .. })
    }
}
