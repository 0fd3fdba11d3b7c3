use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,
    #[error("a nonconstant polynomial is required")]
    ConstantPolynomial,
    #[error("complexity must be a positive integer")]
    InvalidComplexity,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),
    #[error("unit-circle point z = ω + ω̄ must lie in [-2, 2) (ω ≠ 1)")]
    OutsideUnitCircle,
    #[error("signature requested at a jump of the signature function")]
    AtJump,
    #[error("invalid algebraic number: {0}")]
    InvalidAlgebraic(String),
    #[error("twist parameter must be nonnegative, got {0}")]
    NegativeTwist(i64),
    #[error("twist parameter must be at least {min}, got {n}")]
    TwistTooSmall { n: i64, min: i64 },
    #[error("Davis family index must be odd and positive, got {0}")]
    InvalidFamilyIndex(i64),
    #[error("non-cyclic Alexander module: {0}")]
    NonCyclic(String),
    #[error("submodule generator {0} does not divide the module order")]
    NotADivisor(String),
    #[error("oracle module does not match: {0}")]
    OracleMismatch(String),
    #[error("invalid rho table: {0}")]
    InvalidTable(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}
