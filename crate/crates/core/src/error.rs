use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),

    #[error("vertex {0} is unreachable from the root")]
    Unreachable(Vertex),

    #[error("list assignment has no entry for vertex {0}")]
    MissingVertex(Vertex),

    #[error("list of vertex {0} is empty")]
    EmptyList(Vertex),

    #[error("invalid list assignment: {0}")]
    InvalidLists(String),

    #[error("not a degree-assignment: |L({vertex})| = {size} < d({vertex}) = {degree}")]
    NotDegreeAssignment { vertex: Vertex, size: usize, degree: usize },

    #[error("greedy coloring is stuck at vertex {0}: every list color is used by a colored neighbor")]
    GreedyStuck(Vertex),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("move is not a Kempe chain of the coloring")]
    NotAChain,

    #[error("coloring is not a node of the reconfiguration graph")]
    UnknownColoring,

    #[error("reconfiguration graph exceeds the node cap of {cap} colorings")]
    NodeCap { cap: usize },

    #[error("palette cap {cap} is below the maximum degree {max_degree}")]
    PaletteCap { cap: usize, max_degree: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by a resource limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::NodeCap { .. })
    }
}
