use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("weight vector length mismatch: {got} weights for {vars} variables")]
    WeightLength { got: usize, vars: usize },
    #[error("order references undeclared variable index {0}")]
    BadOrderVariable(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exponent {0} exceeds the supported width")]
    ExponentOverflow(u64),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("negative exponent in power")]
    NegativePower,
    #[error("division by zero")]
    DivisionByZero,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("input is not homogeneous")]
    Inhomogeneous,
    #[error("matrix shape violation: {0}")]
    Shape(String),
    #[error("graded matrix entry ({row},{col}) is not homogeneous of degree {expected}")]
    GradedEntry {
        row: usize,
        col: usize,
        expected: i64,
    },
    #[error("exact division failed (internal invariant violated)")]
    ExactDivision,
    #[error("nonzero remainder: {0}")]
    NonzeroRemainder(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("dual-route cross-check mismatch: {0}")]
    CrossCheck(String),
    #[error("unknown registry id `{0}`")]
    UnknownExample(String),
    #[error("field too small: need at least {need} distinct points")]
    FieldTooSmall { need: usize },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
