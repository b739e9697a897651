use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("path vertex u_{index} out of range 1..={m}")]
    LayerOutOfRange { index: usize, m: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph order must be at least 1")]
    EmptyGraph,

    #[error("layer {layer} has order {found}, expected {expected}")]
    UnequalLayerOrders {
        layer: usize,
        expected: usize,
        found: usize,
    },

    #[error("instance too large for exact search: {what} (limit {limit})")]
    InstanceTooLarge { what: String, limit: usize },

    #[error("invalid linear forest: {0}")]
    InvalidForest(String),

    #[error("infeasible forest constraints: {0}")]
    InfeasibleConstraints(String),

    #[error("infeasible loop budget: {0}")]
    InfeasibleBudget(String),

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("disconnected multiple: edge e_{0} has multiplicity 0")]
    Disconnected(usize),

    #[error("component count mismatch at layer {layer}: {components} components, {occurrences} occurrences")]
    ComponentCountMismatch {
        layer: usize,
        components: usize,
        occurrences: usize,
    },

    #[error("endpoint constraint violated: {0}")]
    EndpointConstraint(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
