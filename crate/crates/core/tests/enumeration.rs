mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rid_lab::graph::{
    canonical_form, enumerate_connected, enumerate_trees, is_isomorphic, Graph,
    MAX_CONNECTED_ORDER, MAX_TREE_ORDER,
};

#[test]
fn trees_match_prufer_classes() {
    for n in 1..=8 {
        let ours: Vec<String> = enumerate_trees(n)
            .unwrap()
            .map(|t| common::tree_code_of(&t))
            .collect();
        let distinct: BTreeSet<String> = ours.iter().cloned().collect();
        assert_eq!(distinct.len(), ours.len(), "duplicate tree at n={n}");
        assert_eq!(distinct, common::brute_tree_classes(n), "n={n}");
    }
}

#[test]
fn connected_graphs_match_brute_force_classes() {
    for n in 1..=6 {
        let ours: Vec<u64> = enumerate_connected(n)
            .unwrap()
            .map(|g| common::brute_canonical(&g))
            .collect();
        let distinct: BTreeSet<u64> = ours.iter().copied().collect();
        assert_eq!(distinct.len(), ours.len(), "duplicate graph at n={n}");
        assert_eq!(distinct, common::brute_connected_classes(n), "n={n}");
    }
}

#[test]
fn yields_are_valid() {
    for n in 1..=MAX_CONNECTED_ORDER {
        let gs: Vec<Graph> = enumerate_connected(n).unwrap().collect();
        assert_eq!(gs.len(), common::CONNECTED_COUNTS[n - 1]);
        assert!(gs
            .iter()
            .all(|g| g.n() == n && g.is_connected() && g.check_invariants()));
    }
    for n in 1..=14 {
        let c = enumerate_trees(n)
            .unwrap()
            .filter(|t| t.n() == n && t.is_tree())
            .count();
        assert_eq!(c, common::TREE_COUNTS[n - 1]);
    }
}

#[test]
fn pairwise_non_isomorphic_small() {
    for n in 1..=6 {
        let gs: Vec<Graph> = enumerate_connected(n).unwrap().collect();
        for (i, g) in gs.iter().enumerate() {
            for h in &gs[i + 1..] {
                assert!(!is_isomorphic(g, h));
            }
        }
    }
}

#[test]
fn out_of_range_orders() {
    assert!(enumerate_trees(0).is_err());
    assert!(enumerate_trees(MAX_TREE_ORDER + 1).is_err());
    assert!(enumerate_connected(0).is_err());
    assert!(enumerate_connected(MAX_CONNECTED_ORDER + 1).is_err());
}

fn relabeled(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

prop_compose! {
    fn small_graph()(n in 1usize..=7)
        (n in Just(n), bits in proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))
        -> Graph
    {
        let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
        Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
    }
}

proptest! {
    #[test]
    fn isomorphism_matches_brute_force(g in small_graph(), h in small_graph()) {
        prop_assert_eq!(is_isomorphic(&g, &h), common::brute_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g) == canonical_form(&h), common::brute_isomorphic(&g, &h));
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in small_graph().prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })) {
        let h = relabeled(&g, &perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert!(is_isomorphic(&canonical_form(&g).to_graph(), &g));
    }
}
