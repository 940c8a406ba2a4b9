use thiserror::Error;

use crate::graph::NodeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at node {0}")]
    LoopEdge(NodeId),
    #[error("duplicate edge label `{0}`")]
    DuplicateLabel(String),
    #[error("edge between {0} and {1} belongs to a bundle but has no label")]
    UnlabelledBundleEdge(NodeId, NodeId),
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("duplicate node {0}")]
    DuplicateNode(NodeId),
    #[error("node ids must be positive, got {0}")]
    InvalidNode(NodeId),
    #[error("invalid edge label `{0}` (expected a letter followed by letters, digits or `_`)")]
    InvalidLabel(String),
    #[error("no bundle between {0} and {1}")]
    UnknownBundle(NodeId, NodeId),
    #[error("`{0}` is not a node or bundle edge of the graph")]
    UnknownMember(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph too large: {0} nodes and bundle edges (at most 64 supported)")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("face budget of {0} faces exceeded")]
    FaceBudgetExceeded(usize),
    #[error("vertex `{0}` appears in both complexes")]
    VertexClash(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TubeError {
    #[error("tubes belong to different host graphs")]
    HostMismatch,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParityError {
    #[error("collection {0} is not even")]
    NotEven(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: edge refers to undeclared node {node}")]
    UnknownNodeInEdge { line: usize, node: NodeId },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: GraphError },
    #[error("`{0}` is not a node or edge of the graph")]
    UnknownMember(String),
    #[error("edge `{0}` is not in any bundle")]
    NotInAnyBundle(String),
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::UnknownNodeInEdge { line, .. }
            | ParseError::Invalid { line, .. } => Some(*line),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("face budget of {budget} faces exceeded at collection {collection} of {graph}")]
    FaceBudget { graph: String, collection: String, budget: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parity(#[from] ParityError),
}
