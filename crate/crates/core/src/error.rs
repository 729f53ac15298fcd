use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size limit exceeded: {what} needs {needed}, limit is {limit}")]
    SizeLimit {
        what: String,
        needed: u128,
        limit: u128,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("corrupt character table: {0}")]
    CorruptTable(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("inconsistency: {0}")]
    Inconsistency(String),

    #[error("invariant breach: {0}")]
    InvariantBreach(String),

    #[error("connection set rejected: {}", join(.0))]
    Orientation(Vec<crate::cayley::Violation>),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn size(what: impl Into<String>, needed: u128, limit: u128) -> Self {
        Error::SizeLimit {
            what: what.into(),
            needed,
            limit,
        }
    }
}

fn join(v: &[crate::cayley::Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
