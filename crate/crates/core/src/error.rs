use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("lines {first} and {second} share {shared} points")]
    LinearityViolation {
        first: usize,
        second: usize,
        shared: usize,
    },

    #[error("lines {first} and {second} are equal")]
    DuplicateLine { first: usize, second: usize },

    #[error("line {line} contains point {point} twice")]
    RepeatedPoint { line: usize, point: usize },

    #[error("line {line} references point {point}, but the system has {num_points} points")]
    PointOutOfRange {
        line: usize,
        point: usize,
        num_points: usize,
    },

    #[error("line {line} is empty")]
    EmptyLine { line: usize },

    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("system is not uniform")]
    NotUniform,

    #[error("not a triangle of this system")]
    NotATriangle,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not implemented: {0}")]
    NotImplemented(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),

    #[error("gave up after {0} rejected candidate lines")]
    GenerationExhausted(usize),

    #[error("instance too large for exhaustive enumeration ({what} = {size}, cap {cap})")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("malformed instance: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
