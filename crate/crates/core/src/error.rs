use thiserror::Error;

/// Largest generator accepted anywhere in the crate. Keeps every product of
/// two generators inside `i64`.
pub const MAX_GENERATOR: i64 = 1 << 31;

/// Upper limit on the number of entries of any membership table we build.
pub const MAX_TABLE_LEN: i64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generators not coprime: gcd({a}, {b}) = {gcd}")]
    NotCoprime { a: i64, b: i64, gcd: i64 },

    #[error("generators not coprime: gcd of {generators:?} is {gcd}")]
    GeneratorsNotCoprime { generators: Vec<i64>, gcd: i64 },

    #[error("expected 1 < a < b, got a = {a}, b = {b}")]
    BadOrder { a: i64, b: i64 },

    #[error("generator {0} must be positive")]
    NonPositive(i64),

    #[error("generator {0} is too large (limit is 2^31 - 1)")]
    TooLarge(i64),

    #[error("empty generator list")]
    Empty,

    #[error("membership table would need {0} entries")]
    TableTooLarge(i64),

    #[error("{0} is not a nonzero element of the semigroup")]
    NotMember(i64),

    #[error("empty range: no coprime pairs 1 < a < b <= {0}")]
    EmptyRange(i64),

    #[error("oracle check failed: {0}")]
    Oracle(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, SemigroupError>;
