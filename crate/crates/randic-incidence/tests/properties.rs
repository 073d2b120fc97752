//! Property-based invariants over randomly generated graphs.

mod common;

use proptest::prelude::*;
use randic_incidence::energy::randic_incidence_singular_values;
use randic_incidence::graph::{
    line_graph, parse_graph6, tree_certificate, write_graph6, Graph,
};

// strategy: vertex count plus an edge-presence mask over all vertex pairs
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pair_count = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pair_count).prop_map(move |mask| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(mask)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Graph::from_edge_list(n, pairs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_is_canonical_and_degree_sum_is_2m(g in arb_graph(12)) {
        let edges = g.edges();
        prop_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(edges.iter().all(|&(u, v)| u < v && v < g.n()));
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn construction_is_order_independent(g in arb_graph(10), seed in any::<u64>()) {
        // feed the same pairs back shuffled and flipped
        let mut pairs: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (v, u)).collect();
        let mut state = seed;
        for i in (1..pairs.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            pairs.swap(i, (state >> 33) as usize % (i + 1));
        }
        let rebuilt = Graph::from_edge_list(g.n(), pairs).unwrap();
        prop_assert_eq!(rebuilt, g);
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let s = write_graph6(&g).unwrap();
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back).unwrap(), s);
    }

    #[test]
    fn line_graph_counts(g in arb_graph(10)) {
        let l = line_graph(&g);
        prop_assert_eq!(l.n(), g.m());
        let expected: usize = g.degrees().iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.m(), expected);
    }

    #[test]
    fn delete_edges_shrinks_edge_set_only(g in arb_graph(10), mask in any::<u64>()) {
        let subset: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (mask >> (i % 64) & 1 == 1).then_some(e))
            .collect();
        let smaller = g.delete_edges(&subset).unwrap();
        prop_assert_eq!(smaller.n(), g.n());
        prop_assert_eq!(smaller.m(), g.m() - subset.len());
        prop_assert!(subset.iter().all(|&(u, v)| !smaller.has_edge(u, v)));
    }

    #[test]
    fn singular_value_squares_sum_to_non_isolated_count(g in arb_graph(10)) {
        let sv = randic_incidence_singular_values(&g).unwrap();
        prop_assert_eq!(sv.len(), g.n());
        let sum_sq: f64 = sv.values().iter().map(|s| s * s).sum();
        let r = g.non_isolated_partition().r() as f64;
        prop_assert!((sum_sq - r).abs() <= g.n() as f64 * 1e-10,
            "sum of squares {} vs r {}", sum_sq, r);
        // values are non-negative and sorted
        prop_assert!(sv.values().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(sv.values().iter().all(|&s| s >= 0.0));
    }

    #[test]
    fn tree_certificate_is_invariant_under_relabeling(
        pruefer in proptest::collection::vec(0..7usize, 5),
        rotation in 0..7usize,
    ) {
        // a Pruefer-like sequence on 7 vertices gives a random tree
        let n = 7;
        let tree = tree_from_sequence(n, &pruefer);
        let relabeled: Vec<(usize, usize)> = tree
            .edges()
            .iter()
            .map(|&(u, v)| ((u + rotation) % n, (v + rotation) % n))
            .collect();
        let permuted = Graph::from_edge_list(n, relabeled).unwrap();
        prop_assert_eq!(tree_certificate(&tree), tree_certificate(&permuted));
    }
}

// decode a Pruefer sequence into a labeled tree
fn tree_from_sequence(n: usize, seq: &[usize]) -> Graph {
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, edges).unwrap()
}
