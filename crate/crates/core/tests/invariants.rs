mod common;

use std::collections::BTreeSet;

use common::{corpus, set, subsets};
use gammatheta_core::invariants::{
    all_min_dominating_sets, clique_cover_number, domination_number, enumerate_mcp, independence_number,
    is_dominating, is_theta_independent, is_theta_independent_in, CliquePartition, InvariantBundle,
    ThetaIndependence,
};
use gammatheta_core::{Graph, VertexSet};

/// Every partition of `rest` into cliques, as canonical sorted lists.
fn clique_partitions(g: &Graph, rest: VertexSet, current: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
    let Some(v) = rest.first() else {
        let mut p = current.clone();
        p.sort();
        out.push(p);
        return;
    };
    let others = rest.without(v);
    for extra in subsets(g.n()).filter(|s| s.is_subset(others)) {
        let c = extra.with(v);
        if g.is_clique(c) {
            current.push(c);
            clique_partitions(g, rest - c, current, out);
            current.pop();
        }
    }
}

fn brute_mcps(g: &Graph) -> Vec<Vec<VertexSet>> {
    let mut all = Vec::new();
    clique_partitions(g, g.vertices(), &mut Vec::new(), &mut all);
    let theta = all.iter().map(Vec::len).min().unwrap_or(0);
    let mut min: Vec<_> = all.into_iter().filter(|p| p.len() == theta).collect();
    min.sort();
    min
}

#[test]
fn solvers_agree_with_brute_force() {
    for g in corpus("graphs_n1-7.g6") {
        let n = g.n();
        let doms: Vec<VertexSet> = subsets(n).filter(|&d| is_dominating(&g, d)).collect();
        let gamma = doms.iter().map(|d| d.len()).min().unwrap();
        let alpha = subsets(n).filter(|&s| g.is_independent(s)).map(VertexSet::len).max().unwrap();
        let mcps = brute_mcps(&g);

        let b = InvariantBundle::compute(&g);
        assert_eq!(b.gamma, gamma, "{g:?}");
        assert_eq!(b.alpha, alpha, "{g:?}");
        assert_eq!(b.theta, mcps[0].len(), "{g:?}");
        assert!(is_dominating(&g, b.gamma_witness) && b.gamma_witness.len() == gamma);
        assert!(g.is_independent(b.alpha_witness) && b.alpha_witness.len() == alpha);
        b.theta_witness.validate(&g).unwrap();
        assert!(b.gamma <= b.alpha && b.alpha <= b.theta);

        let mds: Vec<_> = doms.iter().copied().filter(|d| d.len() == gamma).collect();
        assert_eq!(all_min_dominating_sets(&g), mds, "{g:?}");

        let e = enumerate_mcp(&g, 100_000);
        assert!(e.complete);
        let mut got: Vec<Vec<VertexSet>> = e
            .partitions
            .iter()
            .map(|p| {
                p.validate(&g).unwrap();
                let mut c = p.cliques().to_vec();
                c.sort();
                c
            })
            .collect();
        got.sort();
        assert_eq!(got, mcps, "{g:?}");
    }
}

#[test]
fn theta_independence_agrees_with_brute_force() {
    for g in corpus("graphs_n1-6.g6") {
        let mcps = brute_mcps(&g);
        for s in subsets(g.n()).filter(|s| !s.is_empty()) {
            let expected = mcps.iter().any(|p| p.iter().all(|c| (*c & s).len() <= 1));
            let got = is_theta_independent(&g, s, 100_000).unwrap();
            match got {
                ThetaIndependence::Yes(p) => {
                    assert!(expected, "{g:?} {s}");
                    p.validate(&g).unwrap();
                    assert_eq!(p.len(), mcps[0].len());
                    assert!(is_theta_independent_in(s, &p));
                }
                ThetaIndependence::No => assert!(!expected, "{g:?} {s}"),
                ThetaIndependence::Unknown => panic!("cap reached on a tiny graph"),
            }
            if g.is_independent(s) {
                assert!(expected);
            }
        }
    }
}

#[test]
fn every_vertex_lies_in_a_minimum_dominating_set_when_gamma_equals_theta() {
    for g in corpus("graphs_n1-7.g6") {
        let b = InvariantBundle::compute(&g);
        if b.gamma != b.theta {
            continue;
        }
        let covered: VertexSet = all_min_dominating_sets(&g).into_iter().fold(VertexSet::EMPTY, |a, d| a | d);
        assert_eq!(covered, g.vertices(), "{g:?}");
    }
}

#[test]
fn minimum_partitions_have_maximal_members_when_gamma_equals_theta() {
    for g in corpus("graphs_n1-7.g6") {
        if g.min_degree() == 0 {
            continue;
        }
        let (gamma, _) = domination_number(&g);
        let (theta, _) = clique_cover_number(&g);
        if gamma != theta {
            continue;
        }
        for p in enumerate_mcp(&g, 100_000).partitions {
            for &c in p.cliques() {
                let extendable = (g.vertices() - c).iter().any(|v| c.is_subset(g.neighbors(v)));
                assert!(!extendable, "{g:?} {p:?}");
                assert!(c.len() >= 2);
            }
        }
    }
}

#[test]
fn mcp_truncation_is_reported() {
    // C8 has exactly two minimum partitions, its two perfect matchings
    let g = Graph::cycle(8);
    let full = enumerate_mcp(&g, 100);
    assert!(full.complete);
    assert_eq!(full.partitions.len(), 2);
    let cut = enumerate_mcp(&g, 1);
    assert!(!cut.complete);
    assert_eq!(cut.partitions.len(), 1);
}

/// The 2x3 ladder: u1-u2-u3 on top, u4-u5-u6 below, rungs u1u4, u2u5, u3u6.
fn ladder() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
}

#[test]
fn ladder_theta_independence() {
    let h = ladder();
    let c = CliquePartition::new(vec![set(&[0, 3]), set(&[1, 4]), set(&[2, 5])]);
    let c2 = CliquePartition::new(vec![set(&[0, 1]), set(&[3, 4]), set(&[2, 5])]);
    c.validate(&h).unwrap();
    c2.validate(&h).unwrap();
    assert_eq!(clique_cover_number(&h).0, 3);

    assert!(h.is_independent(set(&[0, 2, 4])));
    assert!(!h.is_independent(set(&[0, 1, 2])));
    assert!(is_theta_independent_in(set(&[0, 1, 2]), &c));
    assert!(!is_theta_independent_in(set(&[0, 2, 3]), &c));
    assert!(is_theta_independent_in(set(&[0, 2, 3]), &c2));
    assert!(is_theta_independent(&h, set(&[0, 2, 3]), 100).unwrap().is_yes());
    assert_eq!(is_theta_independent(&h, set(&[0, 1, 3]), 100).unwrap(), ThetaIndependence::No);
    for p in enumerate_mcp(&h, 100).partitions {
        assert!(p.cliques().contains(&set(&[0, 1])) || p.cliques().contains(&set(&[0, 3])));
    }
}

#[test]
fn clique_partition_examples() {
    assert_eq!(enumerate_mcp(&Graph::complete(3), 10).partitions.len(), 1);
    assert_eq!(enumerate_mcp(&Graph::cycle(6), 10).partitions.len(), 2);
    let p4 = enumerate_mcp(&Graph::path(4), 10);
    assert_eq!(p4.partitions.len(), 1);
    assert_eq!(p4.partitions[0].cliques(), &[set(&[0, 1]), set(&[2, 3])]);
    let mcps: BTreeSet<_> = enumerate_mcp(&Graph::cycle(5), 100).partitions.into_iter().map(|p| p.cliques().to_vec()).collect();
    assert_eq!(mcps.len(), 5);
    assert_eq!(independence_number(&Graph::petersen()).0, 4);
}
