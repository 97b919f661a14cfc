use num_bigint::BigInt;

/// Errors surfaced by parameter validation, field construction and the
/// enumeration/counting operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("p must be prime (got p={0})")]
    NonPrimeP(u64),
    #[error("{name} must be a positive integer")]
    ZeroParam { name: &'static str },
    #[error("k > m/e (k={k}, m/e={max})")]
    KTooLarge { k: u32, max: u32 },
    #[error("field size p^m = {size} exceeds the table cap {cap}")]
    FieldTooLargeForTables { size: BigInt, cap: u64 },
    #[error("a linearized Vandermonde matrix has at most k={k} rows (got {rows})")]
    TooManyRows { rows: usize, k: u32 },
    #[error("enumeration of {count} subspaces refused: exceeds cap {cap}")]
    EnumerationTooLarge { count: BigInt, cap: u64 },
    #[error("elements are not linearly independent over the subfield")]
    DependentU,
    #[error("r must satisfy 1 <= r <= k (r={r}, k={k})")]
    BadR { r: u32, k: u32 },
    #[error("index out of range: need 1 <= r <= k and 0 <= i <= k-r (r={r}, i={i}, k={k})")]
    BadIndex { r: u32, i: u32, k: u32 },
    #[error("sequence length {got} does not match ambient dimension + 1 = {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
