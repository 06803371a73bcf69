use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cycle length {0} < 3")]
    CycleTooShort(usize),
    #[error("expected {expected} signs, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("invalid sign value {0} (must be +1 or -1)")]
    InvalidSign(i64),
    #[error("invalid sign character {0:?} (must be '+' or '-')")]
    InvalidSignChar(char),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix rows are not all of length {0}")]
    NotSquare(usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("eigen index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("eigenvalue {0} not in spectrum")]
    EigenvalueNotInSpectrum(i8),
    #[error("characteristic polynomial coefficient residual {0:e} exceeds threshold")]
    RoundingResidual(f64),
    #[error("zero vector")]
    ZeroVector,
    #[error("degenerate eigenvector: component {0} is zero")]
    DegenerateEigenvector(usize),
    #[error("first cosine component is zero")]
    ZeroLeadingComponent,
    #[error("sine vector vanishes (sigma = +1), no information")]
    SineVanishes,
    #[error("inconsistent eigenvector pair at edge {0}")]
    InconsistentPair(usize),
    #[error("{0} is not a valid largest eigenvalue for n = {1}")]
    InvalidLargestEigenvalue(f64, usize),
    #[error("n = {n} exceeds enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("unknown descriptor {0:?}")]
    UnknownDescriptor(String),
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Stable kebab-case tag used by the CLI's one-line error messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::CycleTooShort(_) => "cycle-too-short",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::InvalidSign(_) | Error::InvalidSignChar(_) => "invalid-sign",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::DimensionMismatch(..) | Error::NotSquare(_) => "dimension-mismatch",
            Error::NotSymmetric => "not-symmetric",
            Error::NoConvergence(_) => "no-convergence",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::EigenvalueNotInSpectrum(_) => "eigenvalue-not-in-spectrum",
            Error::RoundingResidual(_) => "rounding-residual",
            Error::ZeroVector => "zero-vector",
            Error::DegenerateEigenvector(_) => "degenerate-eigenvector",
            Error::ZeroLeadingComponent => "zero-leading-component",
            Error::SineVanishes => "sine-vanishes",
            Error::InconsistentPair(_) => "inconsistent-pair",
            Error::InvalidLargestEigenvalue(..) => "invalid-largest-eigenvalue",
            Error::AboveCap { .. } => "above-cap",
            Error::UnknownDescriptor(_) => "unknown-descriptor",
            Error::Input(_) => "invalid-input",
        }
    }
}
