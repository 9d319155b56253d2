use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The search ran out of nodes before reaching a decision. The answer is unknown.
    #[error("node budget of {budget} exhausted after {nodes} nodes; result unknown")]
    BudgetExhausted { budget: u64, nodes: u64 },

    #[error("hypergraph search exhausted its budget ({detail})")]
    SearchExhausted { detail: String },

    #[error("size budget exceeded while building level {level}: {detail}")]
    SizeBudgetExceeded { level: usize, detail: String },

    #[error("invalid backing hypergraph: {0}")]
    InvalidBacking(String),

    /// No hyperedge of the backing hypergraph lies inside the focussed set; only
    /// possible when the construction used a relaxed epsilon.
    #[error("witness extraction failed at level {level}: {detail}")]
    ExtractionFailed { level: usize, detail: String },

    #[error("invalid trace: {0}")]
    InvalidTrace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
