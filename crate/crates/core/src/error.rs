use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,

    #[error("semigroup generators must be positive, got {0}")]
    NonPositiveGenerator(i64),

    #[error("gcd of generators {gens:?} is {gcd}, not 1")]
    GcdNotOne { gens: Vec<i64>, gcd: i64 },

    #[error("operands live over different semigroup rings")]
    RingMismatch,

    #[error("second ideal is not contained in the first")]
    NotContained,

    #[error("ideal is not contained in the ring")]
    NotIntegral,

    #[error("exponent {0} is not a value of the ideal")]
    NotMember(i64),

    #[error("operation is undefined for the regular ring k[[t]]")]
    RegularRing,

    #[error("value set {0} is not closed under the required addition")]
    ClosureViolation(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("{what} = {requested} exceeds the configured ceiling {ceiling}")]
    ResourceLimit {
        what: &'static str,
        requested: i64,
        ceiling: i64,
    },

    #[error("check `{check}` failed: expected {expected}, got {actual}")]
    AssertionFailure {
        check: String,
        expected: String,
        actual: String,
    },

    #[error("cannot parse exponent list {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
