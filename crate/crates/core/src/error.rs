use std::fmt;

use thiserror::Error;

/// First rule a candidate partition breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyCluster { cluster: usize },
    DuplicateMember { index: usize },
    Uncovered { index: usize },
    Incompatible { a: usize, b: usize },
    BadWitness { cluster: usize, member: usize },
    WitnessLength { cluster: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyCluster { cluster } => write!(f, "cluster {cluster} is empty"),
            Violation::DuplicateMember { index } => {
                write!(f, "fingerprint {index} appears in more than one cluster")
            }
            Violation::Uncovered { index } => write!(f, "fingerprint {index} is not in any cluster"),
            Violation::Incompatible { a, b } => {
                write!(f, "fingerprints {a} and {b} are co-clustered but incompatible")
            }
            Violation::BadWitness { cluster, member } => write!(
                f,
                "witness of cluster {cluster} is not a resolution of fingerprint {member}"
            ),
            Violation::WitnessLength { cluster } => {
                write!(f, "witness of cluster {cluster} has the wrong length")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("fingerprints {a} and {b} are incompatible")]
    Incompatible { a: usize, b: usize },

    #[error("empty cluster has no common resolution")]
    EmptyCluster,

    #[error("invalid partition: {0}")]
    InvalidPartition(Violation),

    #[error("index {index} out of range for instance of size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("search space of {size} assignments exceeds node limit {limit}")]
    NodeLimit { size: String, limit: u64 },

    #[error("time limit of {seconds}s exceeded (best upper bound {upper}, lower bound {lower})")]
    Timeout { seconds: f64, upper: usize, lower: usize },

    #[error("graph is not cubic: {0}")]
    NotCubic(String),

    #[error("not a vertex cover: edge ({u}, {v}) is uncovered")]
    NotACover { u: usize, v: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Capacity errors are resource limits, as opposed to malformed input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::NodeLimit { .. } | Error::Timeout { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
