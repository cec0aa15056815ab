mod common;

use common::{corpus, set};
use gammatheta_core::{encode_graph6, is_planar, parse_graph6, Graph, VertexSet};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn assert_simple(g: &Graph) {
    for v in 0..g.n() {
        assert!(!g.neighbors(v).contains(v));
        assert!(g.neighbors(v).is_subset(g.vertices()));
        for u in g.neighbors(v) {
            assert!(g.neighbors(u).contains(v));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn codec_round_trip(g in arb_graph(12)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn residual_removes_exactly_the_closed_neighbourhood(g in arb_graph(10), mask in any::<u64>()) {
        let u = VertexSet::from_bits(mask) & g.vertices();
        prop_assume!(!u.is_empty());
        let (h, map) = g.residual(u).unwrap();
        let kept = map.to_parent(h.vertices());
        prop_assert_eq!(kept, g.vertices() - g.neighborhood(u, 1, true).unwrap());
        assert_simple(&h);
        for a in h.vertices() {
            for b in h.vertices() {
                prop_assert_eq!(h.has_edge(a, b), g.has_edge(map.parent(a), map.parent(b)));
            }
        }
    }

    #[test]
    fn closed_neighbourhoods_grow_with_radius(g in arb_graph(10), v in 0usize..10) {
        prop_assume!(v < g.n());
        let u = VertexSet::singleton(v);
        let mut prev = u;
        for k in 0..g.n() {
            let cur = g.neighborhood(u, k, true).unwrap();
            prop_assert!(prev.is_subset(cur));
            prev = cur;
        }
    }

    #[test]
    fn planar_graphs_are_sparse(g in arb_graph(11)) {
        if is_planar(&g) && g.n() >= 3 {
            prop_assert!(g.edge_count() <= 3 * g.n() - 6);
        }
    }

    #[test]
    fn identified_vertex_is_a_cutvertex(a in arb_graph(6), b in arb_graph(6), i in 0usize..6, j in 0usize..6) {
        let (i, j) = (i % a.n(), j % b.n());
        let g = Graph::identify_vertices(&a, i, &b, j).unwrap();
        prop_assert_eq!(g.n(), a.n() + b.n() - 1);
        prop_assert_eq!(g.edge_count(), a.edge_count() + b.edge_count());
        let only_a = a.degree(i) == 0;
        let only_b = b.degree(j) == 0;
        // the merged vertex separates the two sides unless one of them is
        // not attached to it at all
        if !only_a && !only_b {
            prop_assert!(g.cutvertices().contains(i));
        }
    }
}

#[test]
fn induced_and_residual_chains_stay_simple() {
    for g in corpus("graphs_n1-7.g6") {
        for v in 0..g.n() {
            let (h, map) = g.residual(VertexSet::singleton(v)).unwrap();
            assert_simple(&h);
            if let Some(w) = h.vertices().first() {
                let (h2, map2) = h.delete(VertexSet::singleton(w)).unwrap();
                assert_simple(&h2);
                let composed = map2.then(&map);
                for x in h2.vertices() {
                    assert_ne!(composed.parent(x), v);
                }
            }
        }
        let (same, map) = g.induced(g.vertices()).unwrap();
        assert_eq!(same, g);
        assert_eq!(map.forward(), (0..g.n()).collect::<Vec<_>>());
    }
}

#[test]
fn planar_corpus_is_planar() {
    let graphs = corpus("planar_n1-9.g6");
    assert_eq!(graphs.len(), 87_834);
    assert!(graphs.iter().all(is_planar));
}

#[test]
fn connected_planar_count_up_to_eight() {
    // connected planar graphs on 1..=8 vertices: 1, 1, 2, 6, 20, 99, 646, 5974
    let planar = corpus("connected_n1-8.g6").iter().filter(|g| is_planar(g)).count();
    assert_eq!(planar, 6749);
}

/// Replaces each edge of `base` by a path with a random number of interior
/// vertices, then adds random extra edges.
fn plant_subdivision(base: &Graph, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    let mut n = base.n();
    for (a, b) in base.edges() {
        let mut prev = a;
        for _ in 0..rng.gen_range(0..3) {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, b));
    }
    let extra = rng.gen_range(0..4);
    n += extra;
    for _ in 0..rng.gen_range(0..2 * n) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push((a.min(b), a.max(b)));
        }
    }
    edges.sort();
    edges.dedup();
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn planted_kuratowski_subdivisions_are_rejected() {
    let mut rng = StdRng::seed_from_u64(7);
    for base in [Graph::complete(5), Graph::complete_bipartite(3, 3)] {
        for _ in 0..500 {
            let g = plant_subdivision(&base, &mut rng);
            assert!(!is_planar(&g), "{}", encode_graph6(&g));
            // relabel randomly: planarity must not depend on vertex order
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for i in (1..perm.len()).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let edges: Vec<_> = g.edges().map(|(a, b)| (perm[a], perm[b])).collect();
            assert!(!is_planar(&Graph::from_edges(g.n(), &edges).unwrap()));
        }
    }
}

#[test]
fn spec_examples() {
    let p3 = Graph::path(3);
    assert_eq!(p3.neighborhood(set(&[0]), 1, true).unwrap(), set(&[0, 1]));
    assert_eq!(p3.neighborhood(set(&[0]), 2, false).unwrap(), set(&[2]));
    let c5 = Graph::cycle(5);
    assert_eq!(c5.neighborhood(set(&[0]), 2, true).unwrap(), c5.vertices());

    assert_eq!(Graph::star(3).residual(set(&[0])).unwrap().0.n(), 0);
    let (h, map) = c5.residual(set(&[0])).unwrap();
    assert_eq!(h, Graph::complete(2));
    assert_eq!(map.forward(), &[2, 3]);
    assert_eq!(Graph::cycle(6).residual(set(&[0, 3])).unwrap().0.n(), 0);

    let (h, _) = c5.induced(set(&[0, 1, 3])).unwrap();
    assert_eq!(h, Graph::from_edges(3, &[(0, 1)]).unwrap());
    let (h, _) = Graph::complete(4).induced(set(&[0, 2, 3])).unwrap();
    assert_eq!(h, Graph::complete(3));

    assert!(Graph::path(4).is_separating_edge(1, 2).unwrap());
    assert!(!c5.is_separating_edge(0, 1).unwrap());
    let bowtie = Graph::identify_vertices(&Graph::complete(3), 0, &Graph::complete(3), 0).unwrap();
    assert_eq!((bowtie.n(), bowtie.edge_count()), (5, 6));
    assert!(!bowtie.is_separating_edge(1, 2).unwrap());
    assert_eq!(bowtie.cutvertices(), set(&[0]));
    assert_eq!(p3.cutvertices(), set(&[1]));
    assert!(Graph::cycle(4).cutvertices().is_empty());
    assert_eq!(Graph::identify_vertices(&Graph::complete(2), 0, &Graph::complete(2), 0).unwrap(), Graph::star(2));
}
