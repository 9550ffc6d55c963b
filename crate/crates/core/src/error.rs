use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("even characteristic {0} is not supported")]
    EvenCharacteristic(u64),
    #[error("characteristic must be a prime, got {0}")]
    Unit(u64),
    #[error("characteristic {0} is composite")]
    Composite(u64),
    #[error("use make_prime_field for n = 1")]
    DegreeOne,
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field order {p}^{n} exceeds the size bound {max_q}")]
    TooLarge { p: u64, n: u32, max_q: u64 },
    #[error("{0} is not an odd prime power")]
    NotPrimePower(u64),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {0} is not an element of this field")]
    ForeignElement(u32),
    #[error("coefficient vector has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square: {entries} entries for dimension {dim}")]
    NotSquare { dim: usize, entries: usize },
    #[error("empty circulant row")]
    EmptyRow,
    #[error("entry at ({row}, {col}) is not an element of the field")]
    ForeignEntry { row: usize, col: usize },
    #[error("dimension {dim} exceeds the characteristic polynomial bound {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("vandermonde inputs must be nonzero")]
    ZeroEntry,
    #[error("vandermonde inputs must be pairwise distinct")]
    RepeatedEntry,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("{0}")]
    Precondition(String),
    #[error("generator is not a primitive element")]
    NotPrimitive,
    #[error("circulant row has odd length {0}")]
    OddLength(usize),
    #[error("circulant row is not symmetric: t_{i} != t_{mirror}")]
    NotSymmetric { i: usize, mirror: usize },
    #[error("size mismatch: {coeffs} coefficients, {xs} xs, {ys} ys")]
    SizeMismatch { coeffs: usize, xs: usize, ys: usize },
    #[error("Carlitz check supports 3 <= p <= {max}, got {p}")]
    CarlitzBound { p: u64, max: u64 },
}
