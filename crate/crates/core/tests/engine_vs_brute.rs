//! The flow engine and the exhaustive oracle against a brute-force scan
//! written independently in `common`.

mod common;

use proptest::prelude::*;
use rek_core::connectivity::{
    self, has_3_restricted_cut, is_restricted_cut, lambda2, lambda3, lambda_k_oracle,
    minimum_edge_cut, DEFAULT_ORACLE_LIMIT,
};
use rek_core::{invariants, CutValue, Graph, Method, RestrictedCut};

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2usize..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.55), n * (n - 1) / 2)
            .prop_map(move |bits| common::graph_from_bits(n, &bits))
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    small_graph(max_n).prop_filter("connected", |g| g.is_connected())
}

fn as_option(cut: &RestrictedCut) -> Option<usize> {
    cut.value.finite()
}

fn assert_witness(g: &Graph, cut: &RestrictedCut) {
    match (&cut.value, &cut.witness) {
        (CutValue::Finite(v), Some(w)) => {
            assert_eq!(*v, w.value);
            assert_eq!(w.edges.len(), w.value);
            assert!(w.side_x.contains(0));
            assert_eq!(g.boundary(&w.side_x).unwrap(), *w);
            assert!(is_restricted_cut(g, &w.edges, cut.k), "witness {w:?}");
            if g.is_connected() {
                // a minimum restricted cut leaves exactly two components
                let inside = g.components_within(&w.side_x).len();
                let outside = g.components_within(&w.side_x.complement()).len();
                assert_eq!((inside, outside), (1, 1), "witness {w:?}");
            }
        }
        (CutValue::Infinite, None) => {}
        other => panic!("value and witness disagree: {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edge_connectivity_matches_brute(g in small_graph(9)) {
        let cut = minimum_edge_cut(&g).unwrap();
        prop_assert_eq!(as_option(&cut), common::lambda_k(&g, 1));
        assert_witness(&g, &cut);
    }

    #[test]
    fn lambda2_flow_and_oracle_match_brute(g in small_graph(9).prop_filter("n >= 4", |g| g.order() >= 4)) {
        let expected = common::lambda_k(&g, 2);
        for method in [Method::Flow, Method::Oracle] {
            let cut = lambda2(&g, method, DEFAULT_ORACLE_LIMIT).unwrap();
            prop_assert_eq!(as_option(&cut), expected, "{}", method);
            assert_witness(&g, &cut);
        }
    }

    #[test]
    fn lambda3_flow_and_oracle_match_brute(g in small_graph(10)) {
        let expected = common::lambda_k(&g, 3);
        for method in [Method::Flow, Method::Oracle] {
            let cut = lambda3(&g, method, DEFAULT_ORACLE_LIMIT).unwrap();
            prop_assert_eq!(as_option(&cut), expected, "{}", method);
            assert_witness(&g, &cut);
        }
    }

    #[test]
    fn oracle_handles_higher_levels(g in connected_graph(9), k in 1usize..=4) {
        let cut = lambda_k_oracle(&g, k, DEFAULT_ORACLE_LIMIT).unwrap();
        prop_assert_eq!(as_option(&cut), common::lambda_k(&g, k));
        assert_witness(&g, &cut);
    }

    #[test]
    fn triples_match_brute(g in small_graph(10)) {
        let mut ours = invariants::connected_triples(&g);
        ours.sort_unstable();
        prop_assert_eq!(ours, common::connected_triples(&g));
        prop_assert_eq!(invariants::xi3(&g), common::xi3(&g));
    }

    #[test]
    fn three_restricted_cut_exists_iff_finite(g in connected_graph(10)) {
        let finite = common::lambda_k(&g, 3).is_some();
        prop_assert_eq!(has_3_restricted_cut(&g), finite);
    }

    #[test]
    fn degree_bounds(g in connected_graph(9)) {
        let lambda = connectivity::edge_connectivity(&g).unwrap();
        prop_assert!(lambda <= invariants::min_degree(&g).unwrap());
        if g.order() >= 4 {
            let l2 = lambda2(&g, Method::Flow, DEFAULT_ORACLE_LIMIT).unwrap().value;
            let is_star = invariants::max_degree(&g).unwrap() == g.order() - 1
                && g.size() == g.order() - 1;
            if !is_star {
                prop_assert!(l2 <= CutValue::Finite(invariants::xi(&g).unwrap()));
            }
        }
        let l3 = lambda3(&g, Method::Flow, DEFAULT_ORACLE_LIMIT).unwrap().value;
        if let (CutValue::Finite(v), Some(bound)) = (l3, invariants::xi3(&g)) {
            prop_assert!(v <= bound);
        }
    }
}

#[test]
fn large_graphs_use_the_general_kernel() {
    // Orders above 64 leave the bitset kernel.
    let c70 = rek_core::generators::cycle(70).unwrap();
    assert_eq!(connectivity::edge_connectivity(&c70).unwrap(), 2);
    assert_eq!(
        lambda2(&c70, Method::Flow, 0).unwrap().value,
        CutValue::Finite(2)
    );
    let cut = lambda3(&c70, Method::Flow, 0).unwrap();
    assert_eq!(cut.value, CutValue::Finite(2));
    assert_witness(&c70, &cut);

    let h = rek_core::generators::harary(5, 70).unwrap();
    assert_eq!(connectivity::edge_connectivity(&h).unwrap(), 5);
    let cut = lambda2(&h, Method::Flow, 0).unwrap();
    assert!(cut.value <= CutValue::Finite(invariants::xi(&h).unwrap()));
    assert_witness(&h, &cut);
}
