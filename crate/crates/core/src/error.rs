use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("relation terms are not parallel: {0}")]
    NonParallel(String),

    #[error("relation is not admissible: {0}")]
    NonAdmissible(String),

    #[error("path basis did not stabilise by length {max_len}; the ideal may not contain a power of the arrow ideal")]
    NotTerminating { max_len: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("characteristic {prime} too small for the trace-form radical of a {dim}-dimensional module; use a prime larger than {dim}")]
    FieldTooSmall { prime: u64, dim: usize },

    #[error("field obstruction: End/rad of a module has dimension {quotient_dim} but no idempotent splits it over this field")]
    FieldObstruction { quotient_dim: usize },

    #[error("module is not a direct sum of indecomposable projectives: {0}")]
    NotProjective(String),

    #[error("module is decomposable: {0}")]
    Decomposable(String),

    #[error("modules belong to different algebras")]
    AlgebraMismatch,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("library is not basic: entries {0} and {1} are isomorphic")]
    NonBasic(usize, usize),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("invalid module expression: {0}")]
    Expression(String),

    #[error("invalid library document: {0}")]
    Library(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
