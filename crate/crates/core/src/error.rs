use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// Input violates the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A checked hypothesis of an operation does not hold on the input.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Exact method requested beyond its size limit.
    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    Capacity { what: &'static str, n: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
