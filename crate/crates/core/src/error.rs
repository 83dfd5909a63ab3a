use thiserror::Error;

/// Errors shared by the graph, solver, product and generator operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no path between vertices {0} and {1}")]
    UnreachablePair(usize, usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("operation requires diameter {expected}, graph has diameter {found}")]
    WrongDiameter { expected: u32, found: u32 },
    #[error("subgraph family does not cover the vertex set")]
    NotACover,
    #[error("cover part {0} does not induce a connected isometric subgraph")]
    NotIsometric(usize),
    #[error("expected {expected} replacement graphs, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("rooted product gadget must be connected")]
    DisconnectedGadget,
    #[error("coordinate not valid for this product")]
    InvalidCoordinate,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid tree construction: {0}")]
    InvalidSpec(String),
    #[error("graph of order {0} too large for canonical form (max 16)")]
    TooLarge(usize),
}
