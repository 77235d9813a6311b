use thiserror::Error;

/// Domain errors raised by the library.
///
/// Every variant has a stable short name (see [`Error::name`]) used by the
/// command-line front end for its diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different coefficient fields")]
    FieldMismatch,
    #[error("operation requires a quadratic coefficient field")]
    NotQuadratic,
    #[error("t^2 - ({u})t - ({v}) is reducible over Q")]
    ReducibleModulus { u: String, v: String },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix of size {0} is too large for cofactor expansion")]
    MatrixTooLarge(usize),
    #[error("embedding of t does not satisfy its minimal polynomial")]
    BadEmbedding,
    #[error("dual equation has degree {0} < 3 in the slope variable")]
    DegreeTooLow(u32),
    #[error("dual equation has degree {0} > 3 in the slope variable")]
    DegreeTooHigh(u32),
    #[error("web discriminant vanishes identically")]
    DegenerateWeb,
    #[error("component degree exceeds the requested degree {0}")]
    DegreeExceeded(u32),
    #[error("point is singular for the foliation")]
    SingularPoint,
    #[error("point is not a singular point of the saturated field")]
    NotSingular,
    #[error("vector field is identically zero")]
    ZeroField,
    #[error("components are not homogeneous of a common degree")]
    NonHomogeneous,
    #[error("tangent cone vanishes identically")]
    ZeroTangentCone,
    #[error("parameter makes the family degenerate")]
    DegenerateParameter,
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

impl Error {
    /// Stable identifier, independent of the human-readable message.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::NotQuadratic => "NotQuadratic",
            Error::ReducibleModulus { .. } => "ReducibleModulus",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotSquare { .. } => "NotSquare",
            Error::MatrixTooLarge(_) => "MatrixTooLarge",
            Error::BadEmbedding => "BadEmbedding",
            Error::DegreeTooLow(_) => "DegreeTooLow",
            Error::DegreeTooHigh(_) => "DegreeTooHigh",
            Error::DegenerateWeb => "DegenerateWeb",
            Error::DegreeExceeded(_) => "DegreeExceeded",
            Error::SingularPoint => "SingularPoint",
            Error::NotSingular => "NotSingular",
            Error::ZeroField => "ZeroField",
            Error::NonHomogeneous => "NonHomogeneous",
            Error::ZeroTangentCone => "ZeroTangentCone",
            Error::DegenerateParameter => "DegenerateParameter",
            Error::InvariantViolated(_) => "InvariantViolated",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
