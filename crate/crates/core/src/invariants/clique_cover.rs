//! Clique partitions: the clique covering number `θ`, enumeration of all
//! minimum clique partitions, and θ-independence.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::invariants::independence::greedy_independent;
use crate::vertex_set::VertexSet;

/// Default limit on the number of minimum clique partitions examined per graph.
pub const DEFAULT_MCP_CAP: usize = 10_000;

/// A partition of the vertex set into cliques, kept in canonical order
/// (members sorted by their smallest vertex).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CliquePartition {
    cliques: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("member {0} is empty")]
    EmptyMember(usize),
    #[error("members {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("member {0} is not a clique")]
    NotClique(usize),
    #[error("member {0} uses vertices outside the graph")]
    OutOfRange(usize),
}

impl CliquePartition {
    pub fn new(mut cliques: Vec<VertexSet>) -> Self {
        cliques.sort_by_key(|c| c.first());
        CliquePartition { cliques }
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// The member containing `v`.
    pub fn member_of(&self, v: usize) -> Option<VertexSet> {
        self.cliques.iter().copied().find(|c| c.contains(v))
    }

    /// Checks disjointness, coverage of `V(G)` and that every member is a clique.
    pub fn validate(&self, g: &Graph) -> Result<(), PartitionError> {
        let mut seen = VertexSet::EMPTY;
        for (i, &c) in self.cliques.iter().enumerate() {
            if c.is_empty() {
                return Err(PartitionError::EmptyMember(i));
            }
            if !c.is_subset(g.vertices()) {
                return Err(PartitionError::OutOfRange(i));
            }
            if c.intersects(seen) {
                let j = self.cliques[..i]
                    .iter()
                    .position(|d| d.intersects(c))
                    .expect("overlap has a witness");
                return Err(PartitionError::Overlap(j, i));
            }
            if !g.is_clique(c) {
                return Err(PartitionError::NotClique(i));
            }
            seen |= c;
        }
        match (g.vertices() - seen).first() {
            Some(v) => Err(PartitionError::Uncovered(v)),
            None => Ok(()),
        }
    }

    /// Whether every member meets `s` in at most one vertex.
    pub fn separates(&self, s: VertexSet) -> bool {
        self.cliques.iter().all(|c| (*c & s).len() <= 1)
    }

    /// Maps every member through `f` (used to lift partitions of induced
    /// subgraphs back to the parent graph).
    pub fn map_sets(&self, f: impl Fn(VertexSet) -> VertexSet) -> CliquePartition {
        CliquePartition::new(self.cliques.iter().map(|&c| f(c)).collect())
    }
}

impl fmt::Debug for CliquePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.cliques.iter()).finish()
    }
}

/// `S` is θ-independent in `P` iff no member of `P` holds two vertices of `S`.
pub fn is_theta_independent_in(s: VertexSet, p: &CliquePartition) -> bool {
    !s.is_empty() && p.separates(s)
}

/// Maximal cliques of `G[within]` that contain `v`, via Bron-Kerbosch with pivoting.
pub fn maximal_cliques_containing(g: &Graph, v: usize, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::singleton(v), g.neighbors(v) & within, VertexSet::EMPTY, &mut out);
    out
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (g.neighbors(u) & p).len())
        .expect("nonempty");
    for u in p - g.neighbors(pivot) {
        let nu = g.neighbors(u);
        bron_kerbosch(g, r.with(u), p & nu, x & nu, out);
        p.remove(u);
        x.insert(u);
    }
}

struct Cover<'a> {
    g: &'a Graph,
    best: Vec<VertexSet>,
}

impl Cover<'_> {
    fn lower_bound(&self, rest: VertexSet) -> usize {
        greedy_independent(self.g, rest).len()
    }

    fn search(&mut self, rest: VertexSet, current: &mut Vec<VertexSet>) {
        if rest.is_empty() {
            if current.len() < self.best.len() {
                self.best = current.clone();
            }
            return;
        }
        if current.len() + self.lower_bound(rest) >= self.best.len() {
            return;
        }
        // cover the vertex with the fewest neighbours left; a minimum partition
        // can always be rearranged so that its clique is maximal in `rest`
        let v = rest
            .iter()
            .min_by_key(|&v| (self.g.neighbors(v) & rest).len())
            .expect("nonempty");
        let mut options = maximal_cliques_containing(self.g, v, rest);
        options.sort_by_key(|c| std::cmp::Reverse(c.len()));
        for c in options {
            current.push(c);
            self.search(rest - c, current);
            current.pop();
        }
    }
}

/// `θ(G)` with one minimum clique partition. The empty graph has `θ = 0`.
pub fn clique_cover_number(g: &Graph) -> (usize, CliquePartition) {
    // greedy upper bound: repeatedly take a maximal clique at the first vertex
    let mut rest = g.vertices();
    let mut greedy = Vec::new();
    while let Some(v) = rest.first() {
        let mut c = VertexSet::singleton(v);
        for u in rest {
            if c.is_subset(g.neighbors(u)) {
                c.insert(u);
            }
        }
        rest -= c;
        greedy.push(c);
    }
    let mut cover = Cover { g, best: greedy };
    cover.search(g.vertices(), &mut Vec::new());
    let p = CliquePartition::new(cover.best);
    (p.len(), p)
}

/// Result of a bounded enumeration of minimum clique partitions.
#[derive(Clone, Debug)]
pub struct McpEnumeration {
    pub theta: usize,
    pub partitions: Vec<CliquePartition>,
    /// False when the cap stopped the enumeration before it was exhausted.
    pub complete: bool,
}

/// Calls `visit` once per minimum clique partition of `g`, each produced
/// exactly once. Stops early when `visit` breaks. Returns whether the
/// enumeration ran to completion.
pub fn for_each_mcp(g: &Graph, theta: usize, mut visit: impl FnMut(&CliquePartition) -> ControlFlow<()>) -> bool {
    fn rec(
        g: &Graph,
        theta: usize,
        rest: VertexSet,
        current: &mut Vec<VertexSet>,
        visit: &mut dyn FnMut(&CliquePartition) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let Some(v) = rest.first() else {
            return visit(&CliquePartition::new(current.clone()));
        };
        if current.len() + greedy_independent(g, rest).len() > theta {
            return ControlFlow::Continue(());
        }
        // every clique containing v inside rest: v plus a clique of N(v) ∩ rest
        let nv = g.neighbors(v) & rest;
        let mut stack = vec![(VertexSet::singleton(v), nv)];
        while let Some((clique, extend)) = stack.pop() {
            current.push(clique);
            let flow = rec(g, theta, rest - clique, current, visit);
            current.pop();
            flow?;
            for u in extend {
                let later = extend - VertexSet::full(u + 1);
                stack.push((clique.with(u), later & g.neighbors(u)));
            }
        }
        ControlFlow::Continue(())
    }
    rec(g, theta, g.vertices(), &mut Vec::new(), &mut visit).is_continue()
}

/// Enumerates distinct minimum clique partitions, stopping after `cap`.
pub fn enumerate_mcp(g: &Graph, cap: usize) -> McpEnumeration {
    assert!(cap >= 1, "cap must be at least 1");
    let (theta, _) = clique_cover_number(g);
    let mut partitions = Vec::new();
    let mut overflow = false;
    for_each_mcp(g, theta, |p| {
        if partitions.len() == cap {
            overflow = true;
            return ControlFlow::Break(());
        }
        partitions.push(p.clone());
        ControlFlow::Continue(())
    });
    McpEnumeration {
        theta,
        partitions,
        complete: !overflow,
    }
}

/// Three-valued answer of a θ-independence query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaIndependence {
    /// Witnessed by a minimum clique partition separating the set.
    Yes(CliquePartition),
    /// Every minimum clique partition was examined and none separates the set.
    No,
    /// The enumeration cap was reached before a witness was found.
    Unknown,
}

impl ThetaIndependence {
    pub fn is_yes(&self) -> bool {
        matches!(self, ThetaIndependence::Yes(_))
    }
}

/// Decides whether `s` is θ-independent in `G`, examining at most `cap`
/// minimum clique partitions.
pub fn is_theta_independent(g: &Graph, s: VertexSet, cap: usize) -> Result<ThetaIndependence, GraphError> {
    if s.is_empty() {
        return Err(GraphError::EmptySet);
    }
    g.check_set(s)?;
    let (theta, witness) = clique_cover_number(g);
    if witness.separates(s) {
        return Ok(ThetaIndependence::Yes(witness));
    }
    if s.len() > theta {
        return Ok(ThetaIndependence::No);
    }
    Ok(theta_independent_among(g, theta, s, cap))
}

fn theta_independent_among(g: &Graph, theta: usize, s: VertexSet, cap: usize) -> ThetaIndependence {
    let mut seen = 0;
    let mut found = None;
    let mut capped = false;
    for_each_mcp(g, theta, |p| {
        if seen == cap {
            capped = true;
            return ControlFlow::Break(());
        }
        seen += 1;
        if p.separates(s) {
            found = Some(p.clone());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    match (found, capped) {
        (Some(p), _) => ThetaIndependence::Yes(p),
        (None, true) => ThetaIndependence::Unknown,
        (None, false) => ThetaIndependence::No,
    }
}

impl McpEnumeration {
    /// θ-independence of `s` decided against the enumerated partitions.
    pub fn theta_independence(&self, s: VertexSet) -> ThetaIndependence {
        if s.is_empty() {
            return ThetaIndependence::No;
        }
        match self.partitions.iter().find(|p| p.separates(s)) {
            Some(p) => ThetaIndependence::Yes(p.clone()),
            None if self.complete => ThetaIndependence::No,
            None => ThetaIndependence::Unknown,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn theta_examples() {
        for n in 1..=6 {
            assert_eq!(clique_cover_number(&Graph::complete(n)).0, 1);
        }
        assert_eq!(clique_cover_number(&Graph::cycle(5)).0, 3);
        let (t, p) = clique_cover_number(&Graph::cycle(6));
        assert_eq!(t, 3);
        p.validate(&Graph::cycle(6)).unwrap();
        assert_eq!(clique_cover_number(&Graph::petersen()).0, 5);
        assert_eq!(clique_cover_number(&Graph::empty(0).unwrap()).0, 0);
        assert_eq!(clique_cover_number(&Graph::star(4)).0, 4);
    }

    #[test]
    fn maximal_cliques() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let mut cs = maximal_cliques_containing(&bowtie, 0, bowtie.vertices());
        cs.sort();
        assert_eq!(cs, vec![set(&[0, 1, 2]), set(&[0, 3, 4])]);
        let cs = maximal_cliques_containing(&bowtie, 0, set(&[0, 1, 3]));
        assert_eq!(cs.len(), 2);
        assert_eq!(maximal_cliques_containing(&bowtie, 1, set(&[1])), vec![set(&[1])]);
    }

    #[test]
    fn mcp_enumeration_examples() {
        let e = enumerate_mcp(&Graph::complete(3), 10);
        assert_eq!(e.partitions.len(), 1);
        assert!(e.complete);

        let e = enumerate_mcp(&Graph::cycle(6), 10);
        assert_eq!(e.partitions.len(), 2);
        for p in &e.partitions {
            p.validate(&Graph::cycle(6)).unwrap();
            assert_eq!(p.len(), 3);
        }

        let e = enumerate_mcp(&Graph::path(4), 10);
        assert_eq!(e.partitions, vec![CliquePartition::new(vec![set(&[0, 1]), set(&[2, 3])])]);

        let e = enumerate_mcp(&Graph::cycle(6), 1);
        assert_eq!(e.partitions.len(), 1);
        assert!(!e.complete);
    }

    #[test]
    fn validation_errors() {
        let p4 = Graph::path(4);
        let bad = CliquePartition::new(vec![set(&[0, 2]), set(&[1, 3])]);
        assert_eq!(bad.validate(&p4), Err(PartitionError::NotClique(0)));
        let bad = CliquePartition::new(vec![set(&[0, 1]), set(&[1, 2])]);
        assert_eq!(bad.validate(&p4), Err(PartitionError::Overlap(0, 1)));
        let bad = CliquePartition::new(vec![set(&[0, 1])]);
        assert_eq!(bad.validate(&p4), Err(PartitionError::Uncovered(2)));
    }

    #[test]
    fn theta_independence_examples() {
        // K2 + K1: the only minimum partition is {01},{2}
        let k2k1 = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(is_theta_independent(&k2k1, set(&[0, 1]), 100).unwrap(), ThetaIndependence::No);
        // P3 has two minimum partitions, {01},{2} and {0},{12}; the second splits 0 and 1
        let p3 = Graph::path(3);
        assert!(is_theta_independent(&p3, set(&[0, 1]), 100).unwrap().is_yes());
        assert_eq!(enumerate_mcp(&p3, 10).partitions.len(), 2);
        assert!(is_theta_independent(&p3, set(&[0, 2]), 100).unwrap().is_yes());
        assert!(is_theta_independent(&p3, set(&[1]), 100).unwrap().is_yes());
        assert_eq!(is_theta_independent(&p3, VertexSet::EMPTY, 100), Err(GraphError::EmptySet));

        let p = CliquePartition::new(vec![set(&[0, 1]), set(&[2])]);
        assert!(!is_theta_independent_in(set(&[0, 1]), &p));
        assert!(is_theta_independent_in(set(&[0, 2]), &p));
    }

    #[test]
    fn theta_independence_unknown_at_cap() {
        // C6 = 0..5: the matchings {01,23,45} and {12,34,50}; {0,1} is split only by the second
        let c6 = Graph::cycle(6);
        let first = enumerate_mcp(&c6, 1);
        let s = set(&[0, 1, 3]);
        let full = is_theta_independent(&c6, s, 100).unwrap();
        let capped = theta_independent_among(&c6, 3, s, 1);
        assert!(full.is_yes());
        if first.partitions[0].separates(s) {
            assert!(capped.is_yes());
        } else {
            assert_eq!(capped, ThetaIndependence::Unknown);
        }
    }
}
