use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("endpoint {vertex} out of range for graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    #[error("vertex {0} has no color")]
    Uncolored(usize),

    #[error("{{{0}, {1}}} is not a host edge")]
    NotAHostEdge(usize, usize),

    #[error("host graph has no edges")]
    EdgelessHost,

    #[error("host graph is not bipartite")]
    NotBipartite,

    #[error("operation requires {expected} host")]
    WrongHost { expected: &'static str },

    #[error("invalid expansion: {0}")]
    InvalidSpec(String),

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("random component search gave up after {attempts} attempts (target chi {target})")]
    AttemptCapExceeded { target: usize, attempts: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
