use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} vertices exceeds the capacity of 64")]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph6: {0} vertices is beyond the short form (n <= 62)")]
    Graph6TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrungError {
    #[error("vertex {0} is isolated; the construction needs a non-isolated vertex")]
    IsolatedVertex(usize),
    #[error("no vertex of degree 2 available in the current graph ({n} vertices)", n = .graph.n())]
    NoDegreeTwoVertex { graph: Graph },
    #[error("step count must be at least 1")]
    NoSteps,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial of degree {degree} exceeds alpha = {alpha}")]
    DegreeExceedsAlpha { degree: usize, alpha: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("exhaustive W2 check refused for {n} vertices (cap {cap}); pass force to override")]
    SizeCap { n: usize, cap: usize },
}
