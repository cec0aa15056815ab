//! Constructive sufficient conditions for `γ(G) < θ(G)`.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::HypothesisError;
use crate::graph::Graph;
use crate::invariants::{
    clique_cover_number, domination_number, for_each_mcp, CliquePartition,
};
use crate::planarity::is_planar;
use crate::vertex_set::VertexSet;

/// Extends a set that is θ-independent in the minimum clique partition `p`
/// to a minimum dominating set, by adding the smallest vertex of every
/// member of `p` that `j` misses. Requires `γ(G) = θ(G)`.
pub fn extend_to_min_dominating(g: &Graph, p: &CliquePartition, j: VertexSet) -> Result<VertexSet, HypothesisError> {
    if j.is_empty() {
        return Err(HypothesisError::EmptySet);
    }
    g.check_set(j)?;
    let (theta, _) = clique_cover_number(g);
    if p.validate(g).is_err() || p.len() != theta {
        return Err(HypothesisError::NotMinimumPartition);
    }
    let (gamma, _) = domination_number(g);
    if gamma != theta {
        return Err(HypothesisError::GammaNotTheta { gamma, theta });
    }
    if !p.separates(j) {
        return Err(HypothesisError::NotThetaIndependent);
    }
    let extra: VertexSet = p
        .cliques()
        .iter()
        .filter(|c| !c.intersects(j))
        .map(|c| c.first().expect("members are nonempty"))
        .collect();
    Ok(j | extra)
}

/// A certificate that `γ(G) < θ(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GammaBelowTheta {
    /// `j` is θ-independent in the minimum partition, avoids its member `w`
    /// and dominates it.
    DominatedClique {
        partition: CliquePartition,
        j: VertexSet,
        w: VertexSet,
    },
    /// `v` has two pendant neighbours.
    TwoPendants { v: usize, pendants: (usize, usize) },
    /// `N(v) = {u1, u2}` is independent and each `ui` has a neighbour the
    /// other lacks.
    PrivateNeighbours {
        v: usize,
        u: (usize, usize),
        private: (usize, usize),
    },
    /// `N(v) = {u1, u2}` is independent and `u1`, `u2` share two
    /// nonadjacent neighbours other than `v`.
    NonadjacentCommonNeighbours {
        v: usize,
        u: (usize, usize),
        common: (usize, usize),
    },
    /// `N(v) = {u1, u2}` is independent and both have degree at least 4.
    /// Valid for planar graphs only.
    HighDegreeNeighbours { v: usize, u: (usize, usize) },
    /// `N(v)` is independent, has at least three vertices and none of them
    /// is pendant.
    IndependentNeighbourhood { v: usize, neighbours: VertexSet },
}

impl GammaBelowTheta {
    pub fn kind(&self) -> &'static str {
        match self {
            GammaBelowTheta::DominatedClique { .. } => "dominated_clique",
            GammaBelowTheta::TwoPendants { .. } => "two_pendants",
            GammaBelowTheta::PrivateNeighbours { .. } => "private_neighbours",
            GammaBelowTheta::NonadjacentCommonNeighbours { .. } => "nonadjacent_common_neighbours",
            GammaBelowTheta::HighDegreeNeighbours { .. } => "high_degree_neighbours",
            GammaBelowTheta::IndependentNeighbourhood { .. } => "independent_neighbourhood",
        }
    }

    /// Whether the certificate is only meaningful on planar graphs.
    pub fn planar_only(&self) -> bool {
        matches!(self, GammaBelowTheta::HighDegreeNeighbours { .. })
    }

    /// Replays the hypothesis against `g`.
    pub fn check(&self, g: &Graph) -> bool {
        let valid = |v: usize| v < g.n();
        let pair_nbhd = |v: usize, (a, b): (usize, usize)| {
            valid(v) && valid(a) && valid(b) && a != b && g.neighbors(v) == VertexSet::singleton(a).with(b) && !g.has_edge(a, b)
        };
        match self {
            GammaBelowTheta::DominatedClique { partition, j, w } => {
                partition.validate(g).is_ok()
                    && partition.len() == clique_cover_number(g).0
                    && partition.cliques().contains(w)
                    && !j.is_empty()
                    && partition.separates(*j)
                    && !j.intersects(*w)
                    && g.dominates(*j, *w)
            }
            &GammaBelowTheta::TwoPendants { v, pendants: (a, b) } => {
                valid(v) && valid(a) && valid(b) && a != b
                    && g.has_edge(v, a) && g.has_edge(v, b)
                    && g.degree(a) == 1 && g.degree(b) == 1
            }
            &GammaBelowTheta::PrivateNeighbours { v, u, private: (p1, p2) } => {
                pair_nbhd(v, u)
                    && valid(p1) && valid(p2)
                    && g.has_edge(u.0, p1) && !g.has_edge(u.1, p1)
                    && g.has_edge(u.1, p2) && !g.has_edge(u.0, p2)
            }
            &GammaBelowTheta::NonadjacentCommonNeighbours { v, u, common: (x, y) } => {
                pair_nbhd(v, u)
                    && valid(x) && valid(y) && x != y && x != v && y != v
                    && !g.has_edge(x, y)
                    && [x, y].iter().all(|&z| g.has_edge(u.0, z) && g.has_edge(u.1, z))
            }
            &GammaBelowTheta::HighDegreeNeighbours { v, u } => {
                pair_nbhd(v, u) && g.degree(u.0).min(g.degree(u.1)) >= 4 && is_planar(g)
            }
            &GammaBelowTheta::IndependentNeighbourhood { v, neighbours } => {
                valid(v)
                    && g.neighbors(v) == neighbours
                    && neighbours.len() >= 3
                    && g.is_independent(neighbours)
                    && neighbours.iter().all(|u| g.degree(u) != 1)
            }
        }
    }
}

/// Outcome of a bounded certificate search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "certificate", rename_all = "snake_case")]
pub enum WitnessSearch {
    Found(GammaBelowTheta),
    /// The search space was exhausted without a certificate.
    NotFound,
    /// The budget ran out first.
    Incomplete,
}

struct CliqueDomination<'a> {
    g: &'a Graph,
    cliques: &'a [VertexSet],
    w: VertexSet,
    nodes: usize,
    budget: usize,
}

impl CliqueDomination<'_> {
    /// Picks at most one vertex per member (never from `w`) until `w` is
    /// dominated. `None` on budget exhaustion.
    fn search(&mut self, j: VertexSet, used: VertexSet) -> Option<Option<VertexSet>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let undominated = self.w - self.g.closed_neighbors_of_set(j);
        let Some(x) = undominated.first() else {
            return Some(Some(j));
        };
        for y in self.g.neighbors(x) - self.w - used {
            let member = self
                .cliques
                .iter()
                .copied()
                .find(|c| c.contains(y))
                .expect("partition covers every vertex");
            if let Some(found) = self.search(j.with(y), used | member)? {
                return Some(Some(found));
            }
        }
        Some(None)
    }
}

/// Searches minimum clique partitions (at most `cap`) for a member `W` and a
/// θ-independent set `J` avoiding and dominating `W`. `budget` bounds the
/// total number of search nodes.
pub fn dominated_clique_witness(g: &Graph, cap: usize, budget: usize) -> WitnessSearch {
    let (theta, _) = clique_cover_number(g);
    let mut nodes = 0;
    let mut seen = 0;
    let mut result = WitnessSearch::NotFound;
    for_each_mcp(g, theta, |p| {
        if seen == cap {
            result = WitnessSearch::Incomplete;
            return ControlFlow::Break(());
        }
        seen += 1;
        for &w in p.cliques() {
            let mut search = CliqueDomination {
                g,
                cliques: p.cliques(),
                w,
                nodes,
                budget,
            };
            let outcome = search.search(VertexSet::EMPTY, w);
            nodes = search.nodes;
            match outcome {
                None => {
                    result = WitnessSearch::Incomplete;
                    return ControlFlow::Break(());
                }
                Some(Some(j)) => {
                    result = WitnessSearch::Found(GammaBelowTheta::DominatedClique {
                        partition: p.clone(),
                        j,
                        w,
                    });
                    return ControlFlow::Break(());
                }
                Some(None) => {}
            }
        }
        ControlFlow::Continue(())
    });
    result
}

/// Result of scanning every vertex for the local degree patterns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternScan {
    pub planar: bool,
    pub certificates: Vec<GammaBelowTheta>,
}

/// Every vertex whose neighbourhood matches one of the local patterns, with
/// one witness per (vertex, pattern). The planar-only pattern is reported
/// only when `g` is planar.
pub fn local_pattern_scan(g: &Graph) -> PatternScan {
    let planar = is_planar(g);
    let mut out = Vec::new();
    for v in 0..g.n() {
        let nv = g.neighbors(v);
        let pendants: Vec<usize> = nv.iter().filter(|&u| g.degree(u) == 1).collect();
        if pendants.len() >= 2 {
            out.push(GammaBelowTheta::TwoPendants {
                v,
                pendants: (pendants[0], pendants[1]),
            });
        }
        if nv.len() == 2 && g.is_independent(nv) {
            let u1 = nv.first().expect("two neighbours");
            let u2 = nv.without(u1).first().expect("two neighbours");
            let (n1, n2) = (g.neighbors(u1), g.neighbors(u2));
            if let (Some(p1), Some(p2)) = ((n1 - n2).first(), (n2 - n1).first()) {
                out.push(GammaBelowTheta::PrivateNeighbours {
                    v,
                    u: (u1, u2),
                    private: (p1, p2),
                });
            }
            let common = (n1 & n2).without(v);
            let pair = common
                .iter()
                .find_map(|x| (common - g.closed_neighbors(x)).iter().find(|&y| y > x).map(|y| (x, y)));
            if let Some(common) = pair {
                out.push(GammaBelowTheta::NonadjacentCommonNeighbours { v, u: (u1, u2), common });
            }
            if planar && g.degree(u1).min(g.degree(u2)) >= 4 {
                out.push(GammaBelowTheta::HighDegreeNeighbours { v, u: (u1, u2) });
            }
        }
        if nv.len() >= 3 && g.is_independent(nv) && nv.iter().all(|u| g.degree(u) != 1) {
            out.push(GammaBelowTheta::IndependentNeighbourhood { v, neighbours: nv });
        }
    }
    PatternScan {
        planar,
        certificates: out,
    }
}

/// Outcome of the search for a θ-independent set of the two-vertex residual
/// that dominates the private closed neighbourhood of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "set", rename_all = "snake_case")]
pub enum PrivateCover {
    /// `N[v] \ N[u]` is empty, so there is nothing to dominate.
    Vacuous,
    /// A set (in parent indices) that is θ-independent in `G_{v,u}` and
    /// dominates `N[v] \ N[u]`.
    Found(VertexSet),
    /// No such set of size at most `max_size`; `complete` is false when the
    /// partition cap stopped the search early.
    NotFound { complete: bool },
}

/// Maximum size of the sets tried by [`private_cover`].
pub const PRIVATE_COVER_MAX_SIZE: usize = 3;

/// For an edge `vu` whose ends share at most one neighbour, looks for a set
/// `S ⊆ V(G_{v,u})` with `|S| <= 3` that is θ-independent in `G_{v,u}` and
/// dominates `N[v] \ N[u]`. Single vertices are tried first.
pub fn private_cover(g: &Graph, v: usize, u: usize, cap: usize) -> Result<PrivateCover, HypothesisError> {
    g.check_vertex(v)?;
    g.check_vertex(u)?;
    if !g.has_edge(v, u) {
        return Err(HypothesisError::NotAnEdge(v, u));
    }
    let common = (g.neighbors(v) & g.neighbors(u)).len();
    if common > 1 {
        return Err(HypothesisError::TooManyCommonNeighbors { v, u, common });
    }
    let target = g.closed_neighbors(v) - g.closed_neighbors(u);
    if target.is_empty() {
        return Ok(PrivateCover::Vacuous);
    }
    let (h, map) = g.residual(VertexSet::singleton(v).with(u))?;
    // only vertices next to the target can help
    let useful: Vec<usize> = h
        .vertices()
        .iter()
        .filter(|&x| g.neighbors(map.parent(x)).intersects(target))
        .collect();
    let mut candidates = Vec::new();
    for size in 1..=PRIVATE_COVER_MAX_SIZE {
        collect_covers(g, &map, &useful, target, size, 0, VertexSet::EMPTY, &mut candidates);
    }
    if candidates.is_empty() {
        return Ok(PrivateCover::NotFound { complete: true });
    }
    let (theta, _) = clique_cover_number(&h);
    let mut seen = 0;
    let mut capped = false;
    // candidates are ordered by size; keep the earliest one any partition separates
    let mut best: Option<usize> = None;
    for_each_mcp(&h, theta, |p| {
        if seen == cap {
            capped = true;
            return ControlFlow::Break(());
        }
        seen += 1;
        let limit = best.unwrap_or(candidates.len());
        if let Some(i) = candidates[..limit].iter().position(|&s| p.separates(s)) {
            best = Some(i);
            if i == 0 {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    Ok(match best {
        Some(i) => PrivateCover::Found(map.to_parent(candidates[i])),
        None => PrivateCover::NotFound { complete: !capped },
    })
}

/// Subsets (child indices) of `useful` with exactly `size` members that
/// dominate `target` in the parent graph.
#[allow(clippy::too_many_arguments)]
fn collect_covers(
    g: &Graph,
    map: &crate::graph::VertexMap,
    useful: &[usize],
    target: VertexSet,
    size: usize,
    from: usize,
    chosen: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if chosen.len() == size {
        if g.dominates(map.to_parent(chosen), target) {
            out.push(chosen);
        }
        return;
    }
    for i in from..useful.len() {
        collect_covers(g, map, useful, target, size, i + 1, chosen.with(useful[i]), out);
    }
}
