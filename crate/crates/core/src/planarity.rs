//! Planarity decision by the left-right criterion.
//!
//! Phase one orients the graph along a DFS and computes lowpoints and
//! nesting depths; phase two replays the DFS with children ordered by
//! nesting depth and maintains a stack of conflict pairs of return-edge
//! intervals. The graph is planar iff no constraint is violated. No
//! embedding is produced.

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    n: usize,
    adj: Vec<Vec<usize>>,
    // oriented edges, indexed by edge id
    tail: Vec<usize>,
    head: Vec<usize>,
    oriented: Vec<bool>,
    edge_id: Vec<Vec<usize>>,

    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,

    ordered_out: Vec<Vec<usize>>,
    reference: Vec<usize>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl LrState {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut edge_id = vec![vec![NONE; n]; n];
        let mut tail = Vec::new();
        let mut head = Vec::new();
        for (a, b) in g.edges() {
            edge_id[a][b] = tail.len();
            edge_id[b][a] = tail.len();
            tail.push(a);
            head.push(b);
        }
        let m = tail.len();
        LrState {
            n,
            adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
            tail,
            head,
            oriented: vec![false; m],
            edge_id,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            ordered_out: vec![Vec::new(); n],
            reference: vec![NONE; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
        }
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            let vw = self.edge_id[v][w];
            if self.oriented[vw] {
                continue;
            }
            self.oriented[vw] = true;
            self.tail[vw] = v;
            self.head[vw] = w;
            self.ordered_out[v].push(vw);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }

            self.nesting_depth[vw] = 2 * self.lowpt[vw];
            if self.lowpt2[vw] < self.height[v] {
                self.nesting_depth[vw] += 1;
            }

            if e != NONE {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, iv: &Interval, b: usize) -> bool {
        !iv.is_empty() && self.lowpt[iv.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let out = self.ordered_out[v].clone();
        for (idx, &ei) in out.iter().enumerate() {
            let w = self.head[ei];
            self.stack_bottom[ei] = self.stack.len();
            if ei == self.parent_edge[w] {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::EMPTY,
                    right: Interval { low: ei, high: ei },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.reference[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head[p.left.high] == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head[p.right.high] == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edge implies a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                hl
            } else {
                hr
            };
        }
    }

    fn run(mut self) -> bool {
        let mut roots = Vec::new();
        for v in 0..self.n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.n {
            let nd = &self.nesting_depth;
            self.ordered_out[v].sort_by_key(|&e| nd[e]);
        }
        for r in roots {
            self.stack.clear();
            if !self.test(r) {
                return false;
            }
        }
        true
    }
}

/// Whether `g` admits a plane embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    LrState::new(g).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(is_planar(&Graph::complete(4)));
        assert!(is_planar(&Graph::complete_bipartite(2, 5)));
        assert!(!is_planar(&Graph::petersen()));
    }

    #[test]
    fn small_graphs_are_planar() {
        for mask in 0u32..64 {
            let mut g = Graph::empty(4).unwrap();
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(a, b).unwrap();
                }
            }
            assert!(is_planar(&g));
        }
    }

    #[test]
    fn k33_subdivision_without_kuratowski_subgraph() {
        let g = Graph::from_edges(
            8,
            &[(1, 5), (1, 6), (1, 7), (2, 6), (2, 3), (3, 5), (3, 7), (4, 5), (4, 6), (4, 7)],
        )
        .unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn planar_samples() {
        let grid = Graph::from_edges(
            9,
            &[(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8), (0, 3), (3, 6), (1, 4), (4, 7), (2, 5), (5, 8)],
        )
        .unwrap();
        assert!(is_planar(&grid));
        let goldner_harary = Graph::from_edges(
            11,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (0, 6), (0, 7), (0, 9), (0, 10), (1, 2), (1, 3),
                (1, 5), (1, 6), (1, 8), (1, 9), (1, 10), (2, 3), (3, 4), (3, 5), (3, 6), (4, 6),
                (5, 6), (6, 7), (6, 8), (6, 9), (7, 9), (8, 9), (9, 10),
            ],
        )
        .unwrap();
        assert!(is_planar(&goldner_harary));
    }

    #[test]
    fn disconnected_nonplanar_component() {
        let k5 = Graph::complete(5);
        let g = k5.disjoint_union(&Graph::cycle(3)).unwrap();
        assert!(!is_planar(&g));
        let g = Graph::cycle(3).disjoint_union(&k5).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn mixed_samples() {
        let nonplanar = Graph::from_edges(
            14,
            &[
                (1, 2), (4, 13), (0, 13), (4, 5), (7, 10), (1, 7), (0, 3), (2, 6), (5, 6), (7, 13),
                (4, 8), (0, 8), (0, 9), (2, 13), (6, 7), (3, 6), (2, 8),
            ],
        )
        .unwrap();
        assert!(!is_planar(&nonplanar));
        let nonplanar = Graph::from_edges(
            14,
            &[
                (0, 7), (3, 11), (3, 4), (8, 9), (4, 11), (1, 7), (1, 13), (1, 11), (3, 5), (5, 7),
                (1, 3), (0, 4), (5, 11), (5, 13),
            ],
        )
        .unwrap();
        assert!(!is_planar(&nonplanar));
        let planar = Graph::from_edges(
            14,
            &[(3, 10), (2, 13), (1, 13), (7, 11), (0, 8), (8, 13), (0, 2), (0, 7), (0, 10), (1, 7)],
        )
        .unwrap();
        assert!(is_planar(&planar));
    }
}
