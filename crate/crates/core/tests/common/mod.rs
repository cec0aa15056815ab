#![allow(dead_code)]

use std::path::PathBuf;

use gammatheta_core::{parse_graph6, Graph, VertexSet};

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpora").join(name)
}

pub fn corpus(name: &str) -> Vec<Graph> {
    let text = std::fs::read_to_string(corpus_path(name)).expect("corpus file");
    text.lines().map(|l| parse_graph6(l).expect("valid record")).collect()
}

pub fn set(v: &[usize]) -> VertexSet {
    v.iter().collect()
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u64 << n).map(VertexSet::from_bits)
}

/// Greatest fixpoint by repeated full sweeps over the dominating `k`-sets.
pub fn naive_safe_family(g: &Graph, k: usize) -> Vec<VertexSet> {
    let full = g.vertices();
    let dominates = |d: VertexSet| {
        let mut covered = d;
        for u in d {
            covered |= g.neighbors(u);
        }
        covered == full
    };
    let mut alive: Vec<VertexSet> = subsets(g.n()).filter(|d| d.len() == k && dominates(*d)).collect();
    loop {
        let before = alive.len();
        let snapshot: std::collections::HashSet<VertexSet> = alive.iter().copied().collect();
        alive.retain(|&d| {
            (0..g.n()).filter(|&v| !d.contains(v)).all(|v| {
                (0..g.n())
                    .filter(|&u| d.contains(u) && g.has_edge(u, v))
                    .any(|u| snapshot.contains(&d.without(u).with(v)))
            })
        });
        if alive.len() == before {
            return alive;
        }
    }
}
