use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Edge-list syntax or content problem, with the 1-based line number.
    #[error("edgelist line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    /// graph6 problem, with the 0-based byte offset.
    #[error("graph6 offset {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph with {n} vertices exceeds the limit of {max} for {context}")]
    TooLarge {
        n: usize,
        max: usize,
        context: &'static str,
    },

    #[error("{solver} is capped at n <= {cap}, graph has {n} vertices")]
    CapExceeded {
        solver: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("assignment has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("no connected sample after {attempts} attempts (edge probability too small?)")]
    RetryCapExceeded { attempts: usize },

    #[error("bound violation on {graph_id} ({graph6}): {summary}\n{dump}")]
    Violation {
        graph_id: String,
        graph6: String,
        summary: String,
        dump: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
