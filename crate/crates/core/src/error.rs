use thiserror::Error;

use crate::laurent::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("variable mismatch: {0} vs {1}")]
    VarMismatch(Var, Var),
    #[error("division is not exact")]
    NonExactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("cannot evaluate a polynomial with negative exponents at zero")]
    EvaluateAtZero,
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("{what} exceeds capacity ({value} > {limit})")]
    Capacity {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("closure has {0} components; a knot is required")]
    NotAKnot(usize),
    #[error("torus parameters ({0}, {1}) are not coprime")]
    NonCoprime(i64, i64),
    #[error("invalid twist region: first strand {first}, width {width}, {strands} strands")]
    InvalidRegion {
        first: usize,
        width: usize,
        strands: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("singular interpolation system")]
    SingularSystem,
    #[error("held-out check failed at m = {0}")]
    HeldOutMismatch(i64),
    #[error("degree {degree} exceeds root-finder cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("json: {0}")]
    Json(String),
}

impl Error {
    /// Stable machine-readable code for each failure kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::VarMismatch(..) => "var_mismatch",
            Error::NonExactDivision => "non_exact_division",
            Error::DivisionByZero => "division_by_zero",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::EvaluateAtZero => "evaluate_at_zero",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::StrandMismatch(..) => "strand_mismatch",
            Error::Capacity { .. } => "capacity",
            Error::Parse { .. } => "parse",
            Error::NotAKnot(_) => "not_a_knot",
            Error::NonCoprime(..) => "non_coprime",
            Error::InvalidRegion { .. } => "invalid_region",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::SingularSystem => "singular_system",
            Error::HeldOutMismatch(_) => "held_out_mismatch",
            Error::DegreeCap { .. } => "degree_cap",
            Error::Undefined(_) => "undefined",
            Error::Json(_) => "json",
        }
    }
}
