//! Necessary conditions on a smallest planar graph with `γ = γ^∞ < θ`,
//! evaluated on arbitrary graphs. Any recorded violation shows the graph
//! cannot be such a minimal counterexample.

use serde::{Deserialize, Serialize};

use crate::criticality::certificates::{private_cover, PrivateCover};
use crate::error::HypothesisError;
use crate::eternal::eternal_domination_number;
use crate::graph::Graph;
use crate::invariants::{clique_cover_number, domination_number, DEFAULT_MCP_CAP};
use crate::planarity::is_planar;
use crate::vertex_set::{k_subsets, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOptions {
    /// Check every independent set `I` instead of only `|I| <= 2`.
    pub full_depth: bool,
    /// Partition cap for the θ-independence searches.
    pub mcp_cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            full_depth: false,
            mcp_cap: DEFAULT_MCP_CAP,
        }
    }
}

/// `γ(G_I) = θ(G_I) = γ(G) - |I|` failed for an independent set `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualFailure {
    pub set: VertexSet,
    pub expected: i64,
    pub gamma: usize,
    pub theta: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeCondition {
    /// `N[a] ∩ N[b]` is a clique on 2..=4 vertices, so `γ(G_{a,b}) =
    /// θ(G_{a,b}) = γ(G) - 2` must hold.
    CompleteCommon,
    /// `|N[a] ∩ N[b]| >= 4` and the previous equality fails, so `γ(G \ Q) =
    /// θ(G \ Q) = γ(G) - 1` must hold.
    LargeCommon,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeFailure {
    pub edge: (usize, usize),
    pub condition: EdgeCondition,
    pub expected: i64,
    pub gamma: usize,
    pub theta: usize,
}

/// A set θ-independent in `G_{v,u}` that dominates `N[v] \ N[u]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrivateCoverViolation {
    pub v: usize,
    pub u: usize,
    pub set: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub planar: bool,
    pub gamma: usize,
    pub gamma_inf: usize,
    pub theta: usize,
    /// Planar with `γ = γ^∞ < θ`.
    pub candidate: bool,
    pub min_degree: usize,
    /// Minimum degree below 4.
    pub low_min_degree: bool,
    /// An edge `uv` with `N[u] ⊆ N[v]`, as `(u, v)`.
    pub neighbourhood_containment: Option<(usize, usize)>,
    pub cutvertex: Option<usize>,
    /// Only looked for when the minimum degree is 5.
    pub separating_edge: Option<(usize, usize)>,
    pub residual_failures: Vec<ResidualFailure>,
    /// Whether `residual_failures` covers every independent set.
    pub residual_full_depth: bool,
    pub edge_failures: Vec<EdgeFailure>,
    pub private_covers: Vec<PrivateCoverViolation>,
    /// Edges whose private-cover search hit the partition cap.
    pub private_cover_incomplete: Vec<(usize, usize)>,
}

impl ObstructionReport {
    pub fn obstruction_count(&self) -> usize {
        usize::from(!self.candidate)
            + usize::from(self.low_min_degree)
            + usize::from(self.neighbourhood_containment.is_some())
            + usize::from(self.cutvertex.is_some())
            + usize::from(self.separating_edge.is_some())
            + self.residual_failures.len()
            + self.edge_failures.len()
            + self.private_covers.len()
    }

    pub fn has_obstruction(&self) -> bool {
        self.obstruction_count() > 0
    }
}

fn gamma_theta(g: &Graph) -> (usize, usize) {
    (domination_number(g).0, clique_cover_number(g).0)
}

fn matches(pair: (usize, usize), expected: i64) -> bool {
    pair.0 as i64 == expected && pair.1 as i64 == expected
}

pub fn obstruction_report(g: &Graph) -> ObstructionReport {
    obstruction_report_with(g, ReportOptions::default())
}

pub fn obstruction_report_with(g: &Graph, opts: ReportOptions) -> ObstructionReport {
    let planar = is_planar(g);
    let (gamma, _) = domination_number(g);
    let (gamma_inf, _) = eternal_domination_number(g);
    let (theta, _) = clique_cover_number(g);
    let min_degree = if g.is_empty() { 0 } else { g.min_degree() };

    let neighbourhood_containment = g.edges().find_map(|(a, b)| {
        let (na, nb) = (g.closed_neighbors(a), g.closed_neighbors(b));
        if na.is_subset(nb) {
            Some((a, b))
        } else if nb.is_subset(na) {
            Some((b, a))
        } else {
            None
        }
    });
    let separating_edge = if min_degree == 5 {
        g.edges().find(|&(a, b)| g.is_separating_edge(a, b).expect("edge"))
    } else {
        None
    };

    let max_size = if opts.full_depth { g.n() } else { 2 };
    let mut residual_failures = Vec::new();
    for size in 1..=max_size.min(g.n()) {
        for set in k_subsets(g.n(), size).filter(|&s| g.is_independent(s)) {
            let (h, _) = g.residual(set).expect("nonempty");
            let (hg, ht) = gamma_theta(&h);
            let expected = gamma as i64 - size as i64;
            if !matches((hg, ht), expected) {
                residual_failures.push(ResidualFailure {
                    set,
                    expected,
                    gamma: hg,
                    theta: ht,
                });
            }
        }
    }

    let mut edge_failures = Vec::new();
    for (a, b) in g.edges() {
        let q = g.closed_neighbors(a) & g.closed_neighbors(b);
        let (pair, _) = g.residual(VertexSet::singleton(a).with(b)).expect("nonempty");
        let pair_values = gamma_theta(&pair);
        let pair_ok = matches(pair_values, gamma as i64 - 2);
        if (2..=4).contains(&q.len()) && g.is_clique(q) && !pair_ok {
            edge_failures.push(EdgeFailure {
                edge: (a, b),
                condition: EdgeCondition::CompleteCommon,
                expected: gamma as i64 - 2,
                gamma: pair_values.0,
                theta: pair_values.1,
            });
        }
        if q.len() >= 4 && !pair_ok {
            let (rest, _) = g.delete(q).expect("subset");
            let values = gamma_theta(&rest);
            if !matches(values, gamma as i64 - 1) {
                edge_failures.push(EdgeFailure {
                    edge: (a, b),
                    condition: EdgeCondition::LargeCommon,
                    expected: gamma as i64 - 1,
                    gamma: values.0,
                    theta: values.1,
                });
            }
        }
    }

    let mut private_covers = Vec::new();
    let mut private_cover_incomplete = Vec::new();
    for (a, b) in g.edges() {
        for (v, u) in [(a, b), (b, a)] {
            match private_cover(g, v, u, opts.mcp_cap) {
                Ok(PrivateCover::Found(set)) => private_covers.push(PrivateCoverViolation { v, u, set }),
                Ok(PrivateCover::NotFound { complete: false }) => private_cover_incomplete.push((v, u)),
                Ok(_) | Err(HypothesisError::TooManyCommonNeighbors { .. }) => {}
                Err(e) => unreachable!("edge endpoints are valid: {e}"),
            }
        }
    }

    ObstructionReport {
        planar,
        gamma,
        gamma_inf,
        theta,
        candidate: planar && gamma == gamma_inf && gamma_inf < theta,
        min_degree,
        low_min_degree: min_degree < 4,
        neighbourhood_containment,
        cutvertex: g.cutvertices().first(),
        separating_edge,
        residual_failures,
        residual_full_depth: opts.full_depth,
        edge_failures,
        private_covers,
        private_cover_incomplete,
    }
}

/// Whether `γ^∞(G) = θ(G)`.
pub fn is_maximum_demand(g: &Graph) -> bool {
    eternal_domination_number(g).0 == clique_cover_number(g).0
}

/// Glues `g1` and `g2` at `v1 ~ v2` after checking that `g1`, `g2`,
/// `g1 - v1` and `g2 - v2` are all maximum-demand, and reports whether the
/// result is maximum-demand too.
pub fn cutvertex_composition(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<bool, HypothesisError> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let (g1v, _) = g1.delete(VertexSet::singleton(v1))?;
    let (g2v, _) = g2.delete(VertexSet::singleton(v2))?;
    for (name, g) in [("G1", g1), ("G2", g2), ("G1 - v1", &g1v), ("G2 - v2", &g2v)] {
        if !is_maximum_demand(g) {
            return Err(HypothesisError::NotMaximumDemand(name));
        }
    }
    let glued = Graph::identify_vertices(g1, v1, g2, v2)?;
    Ok(is_maximum_demand(&glued))
}
