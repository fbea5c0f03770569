use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrimeP(u64),
    #[error("modulus {0:?} is not a monic irreducible polynomial of the requested degree")]
    ReducibleModulus(Vec<u32>),
    #[error("no built-in modulus for F_{{{p}^{k}}}; supply one explicitly")]
    NoModulusAvailable { p: u32, k: u32 },
    #[error("field of order {0} is too large for table arithmetic")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("Groebner basis certification failed")]
    CertificationFailed,
    #[error("quotient by a monomial ideal has dimension {0}; only dimension <= 1 is supported")]
    DimensionTooLarge(usize),
    #[error("points {0} and {1} are projectively equal")]
    DuplicatePoint(usize, usize),
    #[error("point {0} has all coordinates zero")]
    ZeroPoint(usize),
    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("enumeration needs {needed} steps, budget is {limit}")]
    BudgetExceeded { needed: u128, limit: u128 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("monomial {0} is not essential")]
    NotEssential(String),
    #[error("condition ({0}) failed: {1}")]
    ConditionFailed(u8, String),
    #[error("the vanishing ideal is not Gorenstein")]
    NotGorenstein,
    #[error("linear form {0} vanishes at point {1}")]
    NotRegular(String, usize),
    #[error("quotient ring is not Artinian")]
    NotArtinian,
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::InternalInconsistency(msg.into())
    }
}
