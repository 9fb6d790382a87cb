use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Errors raised by the library. Check *failures* are data in reports; these
/// are contract violations or malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix has non-constant polynomial entries; evaluate t first")]
    PolynomialEntries,
    #[error("matrix is singular")]
    Singular,
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("direct formulas are implemented for degrees 1 and 2 only (got {0})")]
    UnsupportedDegree(usize),
    #[error("cochain is not in the lifted subcomplex: {0}")]
    NotInSubcomplex(String),
    #[error("input is not a valid representation: {0}")]
    InvalidRep(String),
    #[error("(N, S) is not a Nijenhuis structure: {0}")]
    NotNijenhuis(String),
    #[error("operators are not compatible")]
    NotCompatible,
    #[error("compatibility identities and sampled combinations disagree: {0}")]
    IncompatibleCrossCheck(String),
    #[error("derived consequence violated on validated input: {0}")]
    ConsequenceViolated(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("the two dual-Nijenhuis formulations disagree: {0}")]
    DualRouteDisagreement(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
    #[error("parse error at line {line}, column {column}: {msg}")]
    ParseError { line: usize, column: usize, msg: String },
    #[error("conflicting entry {0}")]
    ConflictingEntry(String),
    #[error(transparent)]
    BadRational(#[from] ParseRationalError),
    #[error("{0}")]
    Schema(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
