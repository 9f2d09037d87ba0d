use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different generator tables")]
    TableMismatch,

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("generator `{name}` has invalid degree {degree}")]
    InvalidDegree { name: String, degree: u32 },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("model is not pure")]
    NotPure,

    #[error("polynomial is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("expected dim H^{degree} = 1, found {found}")]
    TopCohomology { degree: u32, found: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("invalid model: {0}")]
    InvalidModel(#[from] crate::sullivan::Violation),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("quadric ideal is not a complete intersection: Hilbert function {0:?}")]
    HilbertProfile(Vec<usize>),

    #[error("cubic form is singular")]
    SingularForm,

    #[error("zero has no square class")]
    ZeroSquareClass,

    #[error("{0} out of supported range")]
    OutOfRange(String),

    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("parameter constraint violated: {0}")]
    Constraint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
