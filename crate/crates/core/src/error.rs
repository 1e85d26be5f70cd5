use thiserror::Error;

/// Errors raised by the algebraic routines and the text front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("the zero polynomial has no leading term or degree")]
    ZeroPolynomial,

    #[error("the zero module element has no leading term or filtered degree")]
    ZeroElement,

    #[error("exponent vector has length {found}, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("component index {index} out of range for rank {rank}")]
    ComponentOutOfRange { index: usize, rank: usize },

    #[error(
        "monomial product did not terminate within the step cap for generator pair ({hi}, {lo})"
    )]
    RewriteCap { hi: String, lo: String },

    #[error("buchberger exceeded the step cap of {0} pair treatments")]
    StepCapExceeded(usize),

    #[error("schreyer ordering needs a nonzero image for component {0}")]
    SchreyerImage(usize),

    #[error("element {0} is not homogeneous")]
    NotHomogeneous(usize),

    #[error("operation requires a graded module ordering")]
    NotGraded,

    #[error("homogenization degree {requested} is below the filtered degree {degree}")]
    DegreeTooLow { requested: u32, degree: u32 },

    #[error("groebner record is missing representation data")]
    MissingTracking,

    #[error("resolution needs more than {0} steps")]
    MaxLengthExceeded(usize),

    #[error("invalid algebra: {}", .0.join("; "))]
    InvalidAlgebra(Vec<String>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
