//! Exact solvers for domination-type invariants and the one-guard eternal
//! domination game on graphs with at most 64 vertices.

pub mod criticality;
pub mod error;
pub mod eternal;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod planarity;
pub mod vertex_set;

pub use error::{GameError, Graph6Error, Graph6ErrorKind, GraphError, HypothesisError};
pub use graph::{Graph, VertexMap};
pub use graph6::{encode_graph6, parse_graph6};
pub use planarity::is_planar;
pub use vertex_set::{k_subsets, VertexSet, MAX_VERTICES};
