use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("repeated index {0} in a wedge monomial")]
    RepeatedIndex(usize),

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("algebra too large: {0}")]
    TooLarge(String),

    #[error("element does not belong to this algebra: {0}")]
    AlgebraMismatch(String),

    #[error("closure violation: [{left}, {right}] leaves the subspace (term {term})")]
    ClosureViolation { left: String, right: String, term: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("coefficient not representable in {field}: {value}")]
    Unrepresentable { field: String, value: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic polynomial over the rationals limited to dimension {limit}, got {dim}; enable multi-modular mode")]
    RationalLimit { dim: usize, limit: usize },

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown fixture `{name}`; available: {available}")]
    UnknownFixture { name: String, available: String },

    #[error("no Jordan block of size >= {length} at eigenvalue {lambda}")]
    NoChain { length: usize, lambda: String },

    #[error("factor does not divide the characteristic polynomial")]
    NotAFactor,

    #[error("t^{n0} does not exactly divide the characteristic polynomial (zero-root order is {actual})")]
    ZeroOrder { n0: usize, actual: usize },

    #[error("discriminant of a constant polynomial")]
    ConstantPolynomial,

    #[error("missing calibration: {0}")]
    MissingCalibration(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
