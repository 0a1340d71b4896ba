use thiserror::Error;

use crate::divalg::AlgebraTag;

/// Every failure an operation in this crate can report.
///
/// The CLI maps each variant to a stable machine-readable code via
/// [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra tags differ: {0} vs {1}")]
    TagMismatch(AlgebraTag, AlgebraTag),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed automorphism: {0}")]
    MalformedAutomorphism(String),
    #[error("bound must be positive")]
    ZeroBound,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("element is not automorphic: terms twist by {first} and {second}")]
    NotAutomorphic { first: String, second: String },
    #[error("point coordinates do not commute: {0} and {1}")]
    NonCommutingPoint(usize, usize),
    #[error("automorphism mismatch at coordinate {index}: {detail}")]
    AutomorphismMismatch { index: usize, detail: String },
    #[error("shift parameter {0} is not central and fixed by every ring automorphism")]
    NotInF(usize),
    #[error("ring has non-identity automorphisms; central variables required")]
    NonCentralRing,
    #[error("power shift base {d} is below 1 + total degree ({required})")]
    DegreeBoundViolated { d: u64, required: u64 },
    #[error("grid too small: {0}")]
    GridTooSmall(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("oracle relation does not vanish at the generators")]
    OracleInconsistent,
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("powers of the automorphisms do not coincide: {0}")]
    ExponentEqualityFails(String),
    #[error("unsupported automorphism shape: {0}")]
    UnsupportedAutoShape(String),
    #[error("witness hypothesis fails: {0}")]
    WitnessHypothesisFails(String),
    #[error("elements do not commute")]
    CommutationRequired,
    #[error("search exhausted without success: {0}")]
    SearchExhausted(String),
    #[error("unknown verb: {0}")]
    UnknownVerb(String),
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("unknown demo: {0}")]
    UnknownDemo(String),
    #[error("internal check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::TagMismatch(..) => "TagMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::MalformedAutomorphism(_) => "MalformedAutomorphism",
            Error::ZeroBound => "ZeroBound",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::RingMismatch => "RingMismatch",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ZeroElement => "ZeroElement",
            Error::NotAutomorphic { .. } => "NotAutomorphic",
            Error::NonCommutingPoint(..) => "NonCommutingPoint",
            Error::AutomorphismMismatch { .. } => "AutomorphismMismatch",
            Error::NotInF(_) => "NotInF",
            Error::NonCentralRing => "NonCentralRing",
            Error::DegreeBoundViolated { .. } => "DegreeBoundViolated",
            Error::GridTooSmall(_) => "GridTooSmall",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::OracleInconsistent => "OracleInconsistent",
            Error::ModeMismatch(_) => "ModeMismatch",
            Error::ExponentEqualityFails(_) => "ExponentEqualityFails",
            Error::UnsupportedAutoShape(_) => "UnsupportedAutoShape",
            Error::WitnessHypothesisFails(_) => "WitnessHypothesisFails",
            Error::CommutationRequired => "CommutationRequired",
            Error::SearchExhausted(_) => "SearchExhausted",
            Error::UnknownVerb(_) => "UnknownVerb",
            Error::SchemaViolation(_) => "SchemaViolation",
            Error::UnknownDemo(_) => "UnknownDemo",
            Error::CheckFailed(_) => "CheckFailed",
        }
    }

    /// Usage errors exit with status 2, operation errors with status 1.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::UnknownVerb(_) | Error::SchemaViolation(_) | Error::UnknownDemo(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
