use thiserror::Error;

/// Errors produced by the group engine, the decision procedures and the harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} occurs more than once")]
    RepeatedPoint { point: usize },

    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("malformed cycle notation at position {position}: {message}")]
    MalformedSyntax { position: usize, message: String },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: String, limit: u128 },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("construction of {name} produced order {found}, expected {expected}")]
    ConstructionMismatch {
        name: String,
        expected: u128,
        found: u128,
    },

    #[error("{0} is not contained in the parent group")]
    NotASubgroup(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),

    #[error("group file line {line}: {message}")]
    GroupFile { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, limit: u128) -> Self {
        Error::ResourceCap {
            what: what.into(),
            limit,
        }
    }

    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
