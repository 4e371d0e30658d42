use thiserror::Error;

/// Errors raised by the algebra, classification and decomposition routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} lies in the null cone and is not invertible")]
    NullCone(String),

    #[error("Laplacian index {0} is out of range (expected 1..=7)")]
    LaplacianIndex(u32),

    #[error("operator is not nilpotent on this input (no annihilation after {cap} applications)")]
    NotNilpotent { cap: u32 },

    #[error("function is not in the required class: {0}")]
    NotInClass(String),

    #[error("polynomial uses variables outside the {expected} pair")]
    WrongVariables { expected: &'static str },

    #[error("polynomial is not real-valued")]
    NotRealValued,

    #[error("function is not hyperbolic-valued")]
    NotHyperbolicValued,

    #[error("precondition violated: {condition}")]
    PreconditionViolation { condition: String },

    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("invalid JSON at {path}: {message}")]
    Json { path: String, message: String },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

impl Error {
    /// Short machine-readable tag, used for the CLI's structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NullCone(_) => "NullCone",
            Error::LaplacianIndex(_) => "IndexOutOfRange",
            Error::NotNilpotent { .. } => "NotNilpotent",
            Error::NotInClass(_) => "NotInClass",
            Error::WrongVariables { .. } => "WrongVariables",
            Error::NotRealValued => "NotRealValued",
            Error::NotHyperbolicValued => "NotHyperbolicValued",
            Error::PreconditionViolation { .. } => "PreconditionViolation",
            Error::Parse { .. } => "ParseError",
            Error::Json { .. } => "JsonError",
            Error::UnknownSuite(_) => "UnknownSuite",
        }
    }

    pub(crate) fn precondition(condition: impl Into<String>) -> Self {
        Error::PreconditionViolation {
            condition: condition.into(),
        }
    }

    pub(crate) fn json(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Json {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
