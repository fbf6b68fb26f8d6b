use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed shape literal {literal:?}: {reason}")]
    MalformedShape { literal: String, reason: String },

    #[error("mu = {mu} is not contained in lambda = {lambda}")]
    NotContained { lambda: String, mu: String },

    #[error("invalid code operation: {0}")]
    InvalidCode(String),

    #[error("snake sequence is not balanced: {0}")]
    UnbalancedSnakes(String),

    #[error("interval sets do not share the same L/R support")]
    MismatchedSupport,

    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("shape is not a border strip")]
    NotBorderStrip,

    #[error("shape is not edgewise connected")]
    NotConnected,

    #[error("content {0} outside the cutting strip")]
    ContentOutOfRange(i64),

    #[error("invalid restricted Cauchy spec: {0}")]
    InvalidCauchySpec(String),

    #[error("malformed Cauchy spec literal {literal:?}: {reason}")]
    MalformedCauchySpec { literal: String, reason: String },

    #[error("malformed oracle bounds {literal:?}: {reason}")]
    MalformedBounds { literal: String, reason: String },

    #[error("invalid shard {0:?}: expected I/N with 1 <= I <= N")]
    InvalidShard(String),

    #[error("operation requires class {expected}, spec is class {actual}")]
    WrongClass {
        expected: &'static str,
        actual: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
