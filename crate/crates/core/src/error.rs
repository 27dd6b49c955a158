use std::path::PathBuf;

use thiserror::Error;

use crate::instance::Problem;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown problem tag `{0}`")]
    UnknownTag(String),

    #[error("problem {problem} expects a {expected} payload")]
    PayloadMismatch {
        problem: Problem,
        expected: &'static str,
    },

    #[error("problem {problem} cannot be posed on this instance: {reason}")]
    InstanceMismatch { problem: Problem, reason: String },

    #[error("lcol requires a color count (use `lcol:<l>`)")]
    MissingColors,

    #[error("instance too large for {what}: {size} > {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid set system: {0}")]
    InvalidSetSystem(String),

    #[error("invalid CNF: {0}")]
    InvalidCnf(String),

    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("search timed out after {nodes} nodes")]
    Timeout { nodes: u64 },

    #[error("instance has no feasible solution: {0}")]
    Infeasible(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("maximum degree {0} exceeds 2")]
    DegreeTooLarge(usize),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid threshold policy: {0}")]
    InvalidPolicy(String),

    #[error("candidate is infeasible: {0}")]
    InfeasibleCandidate(String),

    #[error("reductions cannot be chained: {0}")]
    IncompatibleChain(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
