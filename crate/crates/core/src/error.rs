use thiserror::Error;

/// Errors raised by the algebra engine and the session layer.
///
/// Every variant maps to a stable machine-readable code (see [`Error::code`])
/// which is what session reports carry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials or ideals belong to different rings")]
    RingMismatch,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("element with nonzero constant term moves the origin off the variety: {0}")]
    NonzeroConstant(String),
    #[error("ideal is not m-primary at the origin (no stabilization up to truncation exponent {cap})")]
    NotMPrimary { cap: u32 },
    #[error("second ideal is not contained in the first (locally)")]
    NotContained,
    #[error("{what} did not stabilize within cap {cap}")]
    NoStabilization { what: String, cap: usize },
    #[error("Ratliff-Rush methods disagree")]
    MethodDisagreement,
    #[error("no superficial element found after {attempts} attempts")]
    SuperficialSearchFailed { attempts: usize },
    #[error("search failed after {attempts} attempts: {what}")]
    SearchFailed { what: String, attempts: usize },
    #[error("J is not a reduction of I within cap {cap}")]
    NotAReductionWithinCap { cap: usize },
    #[error("dimension {d} rejected: {reason}")]
    DimensionMismatch { d: usize, reason: String },
    #[error("Hilbert polynomial fit not validated: {0}")]
    NoStableFit(String),
    #[error("computed negative length {0}")]
    NegativeLength(i64),
    #[error("statement {id} is only checked for d = {expected}, got d = {got}")]
    UnsupportedDimension { id: String, expected: String, got: usize },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),
    #[error("too many variables ({0}); at most {max} are supported", max = crate::poly::MAX_VARS - 1)]
    TooManyVariables(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("monomial oracle refuses input: {0}")]
    NotMonomial(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unbound name `{name}`")]
    UnboundName { line: usize, name: String },
    #[error("line {line}: a session declares one ring")]
    DuplicateRing { line: usize },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// Stable upper-case code used in JSON reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "PARSE_ERROR",
            Error::UnknownVariable(_) => "UNKNOWN_VARIABLE",
            Error::RingMismatch => "RING_MISMATCH",
            Error::ZeroPolynomial => "ZERO_POLYNOMIAL",
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::InvalidRing(_) => "INVALID_RING",
            Error::NonzeroConstant(_) => "NONZERO_CONSTANT",
            Error::NotMPrimary { .. } => "NOT_M_PRIMARY",
            Error::NotContained => "NOT_CONTAINED",
            Error::NoStabilization { .. } => "NO_STABILIZATION",
            Error::MethodDisagreement => "METHOD_DISAGREEMENT",
            Error::SuperficialSearchFailed { .. } => "SUPERFICIAL_SEARCH_FAILED",
            Error::SearchFailed { .. } => "SEARCH_FAILED",
            Error::NotAReductionWithinCap { .. } => "NOT_A_REDUCTION_WITHIN_CAP",
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::NoStableFit(_) => "NO_STABLE_FIT",
            Error::NegativeLength(_) => "NEGATIVE_LENGTH",
            Error::UnsupportedDimension { .. } => "UNSUPPORTED_DIMENSION",
            Error::HypothesisFailed(_) => "HYPOTHESIS_FAILED",
            Error::UnknownStatement(_) => "UNKNOWN_STATEMENT",
            Error::TooManyVariables(_) => "TOO_MANY_VARIABLES",
            Error::ExponentOverflow => "EXPONENT_OVERFLOW",
            Error::NotMonomial(_) => "NOT_MONOMIAL",
            Error::Syntax { .. } => "SYNTAX_ERROR",
            Error::UnboundName { .. } => "UNBOUND_NAME",
            Error::DuplicateRing { .. } => "DUPLICATE_RING",
            Error::Invalid(_) => "INVALID",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
