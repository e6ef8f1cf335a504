use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("graph is not regular (vertex {vertex} has degree {degree}, vertex 0 has {expected})")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("regular of odd degree {0}; only even degree 2k+2 with k >= 1 is supported")]
    OddDegree(usize),

    #[error("degree {0} out of scope; need degree 2k+2 with k >= 1")]
    DegreeOutOfScope(usize),

    #[error("graph is disconnected (vertex {vertex} unreachable from {root})")]
    Disconnected { root: usize, vertex: usize },

    #[error("layer index {index} out of range 1..={max}")]
    LayerOutOfRange { index: usize, max: usize },

    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("labeling document: {0}")]
    Document(String),

    #[error("search budget of {limit} nodes exhausted")]
    SearchBudget { limit: u64 },

    #[error("rejection budget of {attempts} attempts exhausted")]
    RejectionBudget { attempts: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("final verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True for failures that indicate a bug in the construction rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::Verification(_))
    }
}
