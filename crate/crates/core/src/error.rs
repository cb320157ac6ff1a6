use alloc::string::String;

/// Errors from the core library.
///
/// [`Error::Internal`] marks a broken mathematical invariant (a bug), every
/// other variant is bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("line {index} is degenerate (0, 0, 0)")]
    DegenerateLine { index: usize },
    #[error("lines {first} and {second} are proportional")]
    DuplicateLine { first: usize, second: usize },
    #[error("an arrangement needs at least 3 lines, got {count}")]
    TooFewLines { count: usize },
    #[error("all lines pass through one point")]
    AllConcurrent,
    #[error("line index {index} out of range for {count} lines")]
    LineIndex { index: usize, count: usize },
    #[error("k = {k} must be at least 2 and divide {lines}")]
    InvalidOrder { k: u64, lines: usize },
    #[error("band of length {length} is not {k}-resonant")]
    NotResonant { length: usize, k: u64 },
    #[error("invalid coordinate field: {0}")]
    InvalidField(String),
    #[error("operands live in different coordinate fields")]
    MixedFields,
    #[error("unknown catalogue entry '{0}'")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("invalid local system: {0}")]
    InvalidLocalSystem(String),
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
