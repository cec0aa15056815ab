use crate::graph::Graph;
use crate::vertex_set::VertexSet;

struct Mis<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl Mis<'_> {
    fn search(&mut self, mut candidates: VertexSet, mut chosen: VertexSet) {
        // vertices of degree <= 1 in the candidate graph are always safe to take
        loop {
            let forced = candidates
                .iter()
                .find(|&v| (self.g.neighbors(v) & candidates).len() <= 1);
            match forced {
                Some(v) => {
                    chosen.insert(v);
                    candidates -= self.g.closed_neighbors(v);
                }
                None => break,
            }
        }
        if candidates.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return;
        }
        if chosen.len() + candidates.len() <= self.best.len() {
            return;
        }
        let v = candidates
            .iter()
            .max_by_key(|&v| (self.g.neighbors(v) & candidates).len())
            .expect("nonempty");
        self.search(candidates - self.g.closed_neighbors(v), chosen.with(v));
        self.search(candidates.without(v), chosen);
    }
}

/// `α(G)` with one maximum independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let mut mis = Mis {
        g,
        best: VertexSet::EMPTY,
    };
    mis.search(g.vertices(), VertexSet::EMPTY);
    (mis.best.len(), mis.best)
}

/// A maximal independent set inside `within`, chosen greedily by minimum
/// degree. Its size is a lower bound on the number of cliques needed to
/// cover `within`.
pub fn greedy_independent(g: &Graph, within: VertexSet) -> VertexSet {
    let mut rest = within;
    let mut out = VertexSet::EMPTY;
    while !rest.is_empty() {
        let v = rest
            .iter()
            .min_by_key(|&v| (g.neighbors(v) & rest).len())
            .expect("nonempty");
        out.insert(v);
        rest -= g.closed_neighbors(v);
    }
    out
}
