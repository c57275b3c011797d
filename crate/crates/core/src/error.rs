use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("weight a{index}={value} is not positive")]
    NonPositiveWeight { index: usize, value: i64 },

    #[error("gcd({})={gcd} ≠ 1", join(.weights))]
    GcdNotOne { weights: Vec<i64>, gcd: i64 },

    #[error("need at least 2 weights, got {count}")]
    TooFewWeights { count: usize },

    #[error("weight {value} does not fit in 32 bits")]
    WeightTooLarge { value: i64 },

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid quiver: {0}")]
    Validation(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("arrow {0} carries no variable index; rewriting needs x_<i>_<k> arrows")]
    UnlabeledArrow(usize),

    #[error("rewriting incomplete: no relation instance rewrites arrows {first} then {second}")]
    MissingRelationInstance { first: usize, second: usize },

    #[error("quiver has a directed cycle through vertex {0}")]
    CyclicQuiver(String),

    #[error("{count} paths from {from} to {to} exceed the oracle cap of {cap}")]
    PathCapExceeded {
        from: String,
        to: String,
        count: usize,
        cap: usize,
    },

    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
