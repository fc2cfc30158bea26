use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no roots to count")]
    ZeroPolynomial,
    #[error("form {index} is the zero vector")]
    ZeroForm { index: usize },
    #[error("forms {first} and {second} define the same hyperplane")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for {len} items")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("prime {prime} is inadmissible: flat {flat:?} changes rank mod p")]
    InadmissiblePrime { prime: u64, flat: Vec<usize> },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),
    #[error("derivation {derivation} does not preserve hyperplane {hyperplane}")]
    Membership {
        derivation: usize,
        hyperplane: usize,
    },
    #[error("derivation degrees sum to {sum}, but the arrangement has {count} hyperplanes")]
    SaitoDegreeSum { sum: u32, count: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("input too large: {0}")]
    TooLarge(String),
}
