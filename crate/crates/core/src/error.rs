use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency rows are not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("{0}{1} is not an edge")]
    NotAnEdge(usize, usize),
}

/// A graph6 decoding failure, located by byte offset within the record.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty record")]
    Empty,
    #[error("byte {0:#04x} outside the printable range 63..=126")]
    InvalidByte(u8),
    #[error("malformed vertex-count header")]
    BadHeader,
    #[error("graph has {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge region has {got} bytes, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("bytes after the end of the edge region")]
    TrailingGarbage,
    #[error("nonzero padding bits in the final byte")]
    NonzeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("configuration is not dominating; vertex {undominated} is unguarded")]
    NotDominating { undominated: usize },
    #[error("configuration {0} is not in the safe family")]
    NotInFamily(VertexSet),
    #[error("guard count {k} out of range for graph on {n} vertices")]
    GuardCount { k: usize, n: usize },
    #[error("attack sequence must be nonempty")]
    EmptyAttack,
    #[error("{configs} configurations of {k} guards on {n} vertices exceed the solver limit")]
    TooLarge { n: usize, k: usize, configs: u64 },
    #[error("guards at {config} cannot answer an attack on {attack} with guard {guard}")]
    IllegalMove { config: VertexSet, attack: usize, guard: usize },
    #[error("certificate is not closed: {0}")]
    BadCertificate(String),
    #[error("attack search exceeded its budget of {0} states")]
    SearchBudget(usize),
    #[error("no fixed attack sequence defeats {0}")]
    NoFixedAttack(VertexSet),
}

/// A failed hypothesis of one of the certificate constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypothesisError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("requires gamma = theta, got gamma = {gamma}, theta = {theta}")]
    GammaNotTheta { gamma: usize, theta: usize },
    #[error("set must be nonempty")]
    EmptySet,
    #[error("set is not theta-independent in the given partition")]
    NotThetaIndependent,
    #[error("partition is not a minimum clique partition of the graph")]
    NotMinimumPartition,
    #[error("{0}{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("{v} and {u} have {common} common neighbours, at most 1 allowed")]
    TooManyCommonNeighbors { v: usize, u: usize, common: usize },
    #[error("{0} is not maximum-demand")]
    NotMaximumDemand(&'static str),
}
