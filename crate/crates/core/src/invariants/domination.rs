use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Whether `N_1[D] = V`. The empty set dominates only the empty graph.
pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    g.closed_neighbors_of_set(d & g.vertices()) == g.vertices()
}

/// Some vertex not dominated by `d`, if any.
pub fn undominated_vertex(g: &Graph, d: VertexSet) -> Option<usize> {
    (g.vertices() - g.closed_neighbors_of_set(d & g.vertices())).first()
}

struct Search<'a> {
    closed: Vec<VertexSet>,
    g: &'a Graph,
}

impl Search<'_> {
    fn lower_bound(&self, undominated: VertexSet) -> usize {
        let best = (0..self.g.n())
            .map(|v| (self.closed[v] & undominated).len())
            .max()
            .unwrap_or(0);
        if best == 0 {
            usize::MAX
        } else {
            undominated.len().div_ceil(best)
        }
    }

    /// Dominates `undominated` with at most `budget` more vertices.
    fn find(&self, undominated: VertexSet, chosen: VertexSet, budget: usize) -> Option<VertexSet> {
        if undominated.is_empty() {
            return Some(chosen);
        }
        if budget == 0 || self.lower_bound(undominated) > budget {
            return None;
        }
        // the undominated vertex with the fewest ways to be dominated
        let x = undominated
            .iter()
            .min_by_key(|&x| self.closed[x].len())
            .expect("nonempty");
        let candidates = self.closed[x];
        for w in candidates {
            let cover = self.closed[w] & undominated;
            // skip w when another candidate covers a strict superset (ties: keep the smallest index)
            let dominated = candidates.iter().any(|w2| {
                if w2 == w {
                    return false;
                }
                let c2 = self.closed[w2] & undominated;
                cover.is_subset(c2) && (cover != c2 || w2 < w)
            });
            if dominated {
                continue;
            }
            if let Some(d) = self.find(undominated - cover, chosen.with(w), budget - 1) {
                return Some(d);
            }
        }
        None
    }

    fn collect_all(
        &self,
        undominated: VertexSet,
        chosen: VertexSet,
        budget: usize,
        out: &mut BTreeSet<VertexSet>,
    ) {
        if undominated.is_empty() {
            // pad is impossible: every minimum set has exactly gamma members
            if budget == 0 {
                out.insert(chosen);
            }
            return;
        }
        if budget == 0 || self.lower_bound(undominated) > budget {
            return;
        }
        let x = undominated.first().expect("nonempty");
        for w in self.closed[x] {
            if chosen.contains(w) {
                continue;
            }
            self.collect_all(undominated - self.closed[w], chosen.with(w), budget - 1, out);
        }
    }
}

/// `γ(G)` with one minimum dominating set. The empty graph has `γ = 0`.
pub fn domination_number(g: &Graph) -> (usize, VertexSet) {
    let search = Search {
        closed: (0..g.n()).map(|v| g.closed_neighbors(v)).collect(),
        g,
    };
    for k in 0..=g.n() {
        if let Some(d) = search.find(g.vertices(), VertexSet::EMPTY, k) {
            return (k, d);
        }
    }
    unreachable!("V dominates every graph")
}

/// Every dominating set of size `γ(G)`, in increasing mask order.
pub fn all_min_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    let (gamma, _) = domination_number(g);
    let search = Search {
        closed: (0..g.n()).map(|v| g.closed_neighbors(v)).collect(),
        g,
    };
    let mut out = BTreeSet::new();
    search.collect_all(g.vertices(), VertexSet::EMPTY, gamma, &mut out);
    out.into_iter().collect()
}
