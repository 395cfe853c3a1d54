use thiserror::Error;

/// Failures raised by library operations.
///
/// Constraint violations of a φ-vector are not errors; they are reported
/// as data by [`crate::phi::validate`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: String },
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("kind mismatch: {0}")]
    Kind(String),
    #[error("gcd({a}, {n}) is not 1")]
    NotCoprime { a: i64, n: u64 },
    #[error("limit {limit} exceeds the sieve cap {cap}")]
    SieveCap { limit: u64, cap: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("no turnover found below the prime cap {0}")]
    ScanCap(u64),
    #[error("no root: {0}")]
    NoRoot(String),
    #[error("unknown example id `{0}`")]
    UnknownExample(String),
    #[error("malformed example: {0}")]
    MalformedExample(String),
    #[error("not an integer: {0}")]
    NonInteger(String),
    #[error("invalid value: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
