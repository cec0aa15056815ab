//! Simple undirected graphs on at most 64 vertices with bitset adjacency rows.

use std::fmt;

use crate::error::GraphError;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A finite simple undirected graph.
///
/// Row `i` of the adjacency table is the open neighbourhood of vertex `i`.
/// Rows are symmetric and irreflexive. A graph with `n == 0` only arises as
/// the output of a residual or induced construction.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (a, b)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "])")
    }
}

/// Child-to-parent vertex table produced by every induced construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    forward: Vec<usize>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            forward: (0..n).collect(),
        }
    }

    pub fn from_parent_set(set: VertexSet) -> Self {
        VertexMap {
            forward: set.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Parent index of child vertex `v`.
    pub fn parent(&self, v: usize) -> usize {
        self.forward[v]
    }

    /// Child index of parent vertex `p`, if `p` survived.
    pub fn child(&self, p: usize) -> Option<usize> {
        self.forward.iter().position(|&x| x == p)
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn to_parent(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.forward[v]).collect()
    }

    pub fn to_child(&self, set: VertexSet) -> VertexSet {
        self.forward
            .iter()
            .enumerate()
            .filter(|(_, &p)| set.contains(p))
            .map(|(c, _)| c)
            .collect()
    }

    /// `self` maps a child of `self` into some graph `H`; `outer` maps `H`
    /// into its own parent. The result maps the child directly to the outer
    /// parent.
    pub fn then(&self, outer: &VertexMap) -> VertexMap {
        VertexMap {
            forward: self.forward.iter().map(|&p| outer.forward[p]).collect(),
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let full = VertexSet::full(n);
        for (i, r) in rows.iter().enumerate() {
            if !r.is_subset(full) {
                return Err(GraphError::VertexOutOfRange {
                    vertex: r.upper_bound() - 1,
                    n,
                });
            }
            if r.contains(i) {
                return Err(GraphError::SelfLoop(i));
            }
            for j in r.iter() {
                if !rows[j].contains(i) {
                    return Err(GraphError::Asymmetric(i, j));
                }
            }
        }
        Ok(Graph {
            n,
            adj: rows,
            labels: None,
        })
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let full = VertexSet::full(n);
        Graph {
            n,
            adj: (0..n).map(|i| full.without(i)).collect(),
            labels: None,
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path fits")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges).expect("cycle fits")
    }

    /// `K_{a,b}` with the `a`-side on vertices `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in a..a + b {
                edges.push((i, j));
            }
        }
        Graph::from_edges(a + b, &edges).expect("bipartite fits")
    }

    pub fn star(leaves: usize) -> Self {
        Graph::complete_bipartite(1, leaves)
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen fits")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N_1(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N_1[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N_1[U]`, the union of closed neighbourhoods over `set`.
    #[inline]
    pub fn closed_neighbors_of_set(&self, set: VertexSet) -> VertexSet {
        let mut out = set;
        for v in set {
            out |= self.adj[v];
        }
        out
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Original vertex name of `v` (its own index when no labels are attached).
    pub fn label(&self, v: usize) -> usize {
        self.labels.as_ref().map_or(v, |l| l[v])
    }

    pub fn with_labels(mut self, labels: Vec<usize>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, ordered by `b` then `a`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |b| {
            (self.adj[b] & VertexSet::full(b))
                .iter()
                .map(move |a| (a, b))
        })
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|i| (full - self.adj[i]).without(i)).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    /// Whether every vertex of `target` lies in `by` or has a neighbour in it.
    pub fn dominates(&self, by: VertexSet, target: VertexSet) -> bool {
        target.is_subset(self.closed_neighbors_of_set(by))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, set: VertexSet) -> Result<(), GraphError> {
        if set.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: set.upper_bound() - 1,
                n: self.n,
            })
        }
    }

    /// Vertices at distance at most `k` from `source` (which must lie inside
    /// `within`), using only vertices of `within`.
    pub fn ball(&self, source: VertexSet, k: usize, within: VertexSet) -> VertexSet {
        let mut seen = source & within;
        let mut frontier = seen;
        for _ in 0..k {
            if frontier.is_empty() {
                break;
            }
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next = (next & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// `N_k[U]` when `closed`, otherwise `N_k(U) = ∪_{u∈U} N_k(u)` where
    /// `N_k(u)` is the set of vertices at distance exactly `k` from `u`.
    ///
    /// The open form is taken vertex by vertex, so for `|U| >= 2` it may
    /// contain members of `U` (e.g. two adjacent vertices with `k = 1`).
    /// For `k = 0` the open form is `U` itself.
    pub fn neighborhood(&self, set: VertexSet, k: usize, closed: bool) -> Result<VertexSet, GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySet);
        }
        self.check_set(set)?;
        let all = self.vertices();
        if closed {
            return Ok(self.ball(set, k, all));
        }
        let mut out = VertexSet::EMPTY;
        for u in set {
            let single = VertexSet::singleton(u);
            let inner = if k == 0 {
                VertexSet::EMPTY
            } else {
                self.ball(single, k - 1, all)
            };
            out |= self.ball(single, k, all) - inner;
        }
        Ok(out)
    }

    /// `G[W]`, renumbering the kept vertices in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, VertexMap), GraphError> {
        self.check_set(keep)?;
        let map = VertexMap::from_parent_set(keep);
        let adj = map
            .forward()
            .iter()
            .map(|&p| map.to_child(self.adj[p] & keep))
            .collect();
        let labels = map.forward().iter().map(|&p| self.label(p)).collect();
        let g = Graph {
            n: map.len(),
            adj,
            labels: Some(labels),
        };
        Ok((g, map))
    }

    /// `G_U = G[V \ N_1[U]]`.
    pub fn residual(&self, set: VertexSet) -> Result<(Graph, VertexMap), GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySet);
        }
        self.check_set(set)?;
        self.induced(self.vertices() - self.closed_neighbors_of_set(set))
    }

    /// `G \ X`.
    pub fn delete(&self, remove: VertexSet) -> Result<(Graph, VertexMap), GraphError> {
        self.check_set(remove)?;
        self.induced(self.vertices() - remove)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        self.ball(VertexSet::singleton(start), usize::MAX, within)
    }

    /// Connected components of `G[within]`, each as a vertex set, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The empty graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `G[V \ {a, b}]` is disconnected, for an edge `ab`.
    pub fn is_separating_edge(&self, a: usize, b: usize) -> Result<bool, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if !self.has_edge(a, b) {
            return Err(GraphError::NotAnEdge(a, b));
        }
        let rest = self.vertices().without(a).without(b);
        Ok(rest.len() > 1 && self.components_within(rest).len() > 1)
    }

    /// Articulation points by DFS low-link.
    pub fn cutvertices(&self) -> VertexSet {
        struct Dfs<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            timer: usize,
            cut: VertexSet,
        }
        impl Dfs<'_> {
            fn visit(&mut self, v: usize, parent: Option<usize>) {
                self.timer += 1;
                self.disc[v] = self.timer;
                self.low[v] = self.timer;
                let mut children = 0;
                for w in self.g.adj[v] {
                    if self.disc[w] == 0 {
                        children += 1;
                        self.visit(w, Some(v));
                        self.low[v] = self.low[v].min(self.low[w]);
                        if parent.is_some() && self.low[w] >= self.disc[v] {
                            self.cut.insert(v);
                        }
                    } else if Some(w) != parent {
                        self.low[v] = self.low[v].min(self.disc[w]);
                    }
                }
                if parent.is_none() && children > 1 {
                    self.cut.insert(v);
                }
            }
        }
        let mut dfs = Dfs {
            g: self,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            timer: 0,
            cut: VertexSet::EMPTY,
        };
        for v in 0..self.n {
            if dfs.disc[v] == 0 {
                dfs.visit(v, None);
            }
        }
        dfs.cut
    }

    /// Glues `g1` and `g2` by identifying `v1` with `v2`.
    ///
    /// Vertices of `g1` keep their indices; the merged vertex is `v1`; the
    /// remaining vertices of `g2` follow in their original order.
    pub fn identify_vertices(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph, GraphError> {
        g1.check_vertex(v1)?;
        g2.check_vertex(v2)?;
        let n = g1.n + g2.n - 1;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let map2 = |w: usize| -> usize {
            match w.cmp(&v2) {
                std::cmp::Ordering::Equal => v1,
                std::cmp::Ordering::Less => g1.n + w,
                std::cmp::Ordering::Greater => g1.n + w - 1,
            }
        };
        let mut g = Graph::empty(n)?;
        for (a, b) in g1.edges() {
            g.add_edge(a, b)?;
        }
        for (a, b) in g2.edges() {
            g.add_edge(map2(a), map2(b))?;
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (a, b) in self.edges() {
            g.add_edge(a, b)?;
        }
        for (a, b) in other.edges() {
            g.add_edge(a + self.n, b + self.n)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn bowtie() -> Graph {
        // two triangles sharing vertex 0
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn neighborhood_examples() {
        let p3 = Graph::path(3);
        assert_eq!(p3.neighborhood(set(&[0]), 1, true).unwrap(), set(&[0, 1]));
        assert_eq!(p3.neighborhood(set(&[0]), 2, false).unwrap(), set(&[2]));
        let c5 = Graph::cycle(5);
        assert_eq!(c5.neighborhood(set(&[0]), 2, true).unwrap(), c5.vertices());
        assert_eq!(c5.neighborhood(set(&[0]), 2, false).unwrap(), set(&[2, 3]));
        // open form is per-vertex: adjacent members reappear
        assert_eq!(p3.neighborhood(set(&[0, 1]), 1, false).unwrap(), set(&[0, 1, 2]));
        assert_eq!(p3.neighborhood(set(&[1]), 0, false).unwrap(), set(&[1]));
    }

    #[test]
    fn neighborhood_errors() {
        let p3 = Graph::path(3);
        assert_eq!(p3.neighborhood(VertexSet::EMPTY, 1, true), Err(GraphError::EmptySet));
        assert!(matches!(
            p3.neighborhood(set(&[5]), 1, true),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn residual_examples() {
        let (g, _) = Graph::star(3).residual(set(&[0])).unwrap();
        assert_eq!(g.n(), 0);

        let (g, map) = Graph::cycle(5).residual(set(&[0])).unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(map.forward(), &[2, 3]);

        let (g, _) = Graph::cycle(6).residual(set(&[0, 3])).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(Graph::path(3).residual(VertexSet::EMPTY).unwrap_err(), GraphError::EmptySet);
    }

    #[test]
    fn induced_examples() {
        let c5 = Graph::cycle(5);
        let (g, map) = c5.induced(c5.vertices()).unwrap();
        assert_eq!(g, c5);
        assert_eq!(map, VertexMap::identity(5));

        let (g, _) = Graph::complete(4).induced(set(&[0, 2, 3])).unwrap();
        assert_eq!(g, Graph::complete(3));

        let (g, map) = c5.induced(set(&[0, 1, 3])).unwrap();
        assert_eq!(g, Graph::from_edges(3, &[(0, 1)]).unwrap());
        assert_eq!(map.parent(2), 3);
        assert_eq!(g.labels(), Some(&[0usize, 1, 3][..]));
    }

    #[test]
    fn vertex_map_composition() {
        let c6 = Graph::cycle(6);
        let (h, outer) = c6.induced(set(&[1, 2, 3, 5])).unwrap();
        let (_, inner) = h.induced(set(&[0, 2, 3])).unwrap();
        let direct = inner.then(&outer);
        assert_eq!(direct.forward(), &[1, 3, 5]);
        assert_eq!(direct.to_parent(set(&[0, 2])), set(&[1, 5]));
        assert_eq!(direct.child(3), Some(1));
        assert_eq!(direct.child(2), None);
    }

    #[test]
    fn separating_edges() {
        let p4 = Graph::path(4);
        assert!(p4.is_separating_edge(1, 2).unwrap());
        assert!(!p4.is_separating_edge(0, 1).unwrap());
        let c5 = Graph::cycle(5);
        for (a, b) in c5.edges() {
            assert!(!c5.is_separating_edge(a, b).unwrap());
        }
        assert!(!bowtie().is_separating_edge(1, 2).unwrap());
        assert_eq!(p4.is_separating_edge(0, 2), Err(GraphError::NotAnEdge(0, 2)));
        assert!(!Graph::complete(3).is_separating_edge(0, 1).unwrap());
    }

    #[test]
    fn cutvertex_examples() {
        assert_eq!(Graph::path(3).cutvertices(), set(&[1]));
        assert_eq!(Graph::cycle(4).cutvertices(), VertexSet::EMPTY);
        assert_eq!(bowtie().cutvertices(), set(&[0]));
        assert_eq!(Graph::path(5).cutvertices(), set(&[1, 2, 3]));
    }

    #[test]
    fn identify_examples() {
        let k2 = Graph::complete(2);
        let g = Graph::identify_vertices(&k2, 1, &k2, 0).unwrap();
        assert_eq!(g, Graph::path(3));

        let k3 = Graph::complete(3);
        let g = Graph::identify_vertices(&k3, 0, &k3, 0).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.cutvertices(), set(&[0]));
    }

    #[test]
    fn rows_are_validated() {
        let bad = vec![set(&[1]), VertexSet::EMPTY];
        assert_eq!(Graph::from_rows(bad), Err(GraphError::Asymmetric(0, 1)));
        assert_eq!(Graph::from_rows(vec![set(&[0])]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::empty(65).unwrap_err(), GraphError::TooManyVertices(65));
    }

    #[test]
    fn complement_and_degrees() {
        let c5 = Graph::cycle(5);
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert_eq!(cc.min_degree(), 2);
        assert_eq!(Graph::star(4).max_degree(), 4);
        assert_eq!(Graph::petersen().edge_count(), 15);
        assert!(Graph::complete(4).is_clique(VertexSet::full(4)));
        assert!(c5.is_independent(set(&[0, 2])));
        assert!(!c5.is_independent(set(&[0, 1])));
    }
}
