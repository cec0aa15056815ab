//! Exact solvers for the domination number, independence number and clique
//! covering number.

pub mod clique_cover;
pub mod domination;
pub mod independence;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use clique_cover::{
    clique_cover_number, enumerate_mcp, for_each_mcp, is_theta_independent, is_theta_independent_in,
    maximal_cliques_containing, CliquePartition, McpEnumeration, PartitionError, ThetaIndependence,
    DEFAULT_MCP_CAP,
};
pub use domination::{all_min_dominating_sets, domination_number, is_dominating, undominated_vertex};
pub use independence::{greedy_independent, independence_number};

/// `γ`, `α` and `θ` together with one optimal witness each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub gamma: usize,
    pub gamma_witness: VertexSet,
    pub alpha: usize,
    pub alpha_witness: VertexSet,
    pub theta: usize,
    pub theta_witness: CliquePartition,
}

impl InvariantBundle {
    pub fn compute(g: &Graph) -> Self {
        let (gamma, gamma_witness) = domination_number(g);
        let (alpha, alpha_witness) = independence_number(g);
        let (theta, theta_witness) = clique_cover_number(g);
        debug_assert!(gamma <= alpha && alpha <= theta);
        InvariantBundle {
            gamma,
            gamma_witness,
            alpha,
            alpha_witness,
            theta,
            theta_witness,
        }
    }
}
