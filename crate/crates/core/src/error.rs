use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("value not in the coefficient field: {0}")]
    NotInField(String),
    #[error("element is not real")]
    NotReal,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix is singular")]
    Singular,
    #[error("not divisible")]
    NotDivisible,
    #[error("map does not carry the source hyperquadric into the target: {0}")]
    MapInvalid(Box<Error>),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("map components share a common factor: {0}")]
    NotLowestTerms(String),
    #[error("Hermitian forms of the two maps differ")]
    FormsDiffer,
    #[error("map components are linearly dependent")]
    DependentComponents,
    #[error("unsupported spectrum: {0}")]
    UnsupportedSpectrum(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("map is not of degree 2: {0}")]
    NotDegree2(String),
    #[error("not a sphere map: {0}")]
    NotASphereMap(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("map is not in any class: {0}")]
    NotInAnyClass(String),
    #[error("unknown catalog id {0}")]
    UnknownId(String),
}
