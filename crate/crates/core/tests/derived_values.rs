//! Values frozen from an exhaustive reference run (every bipartition of the
//! product), kept here so regressions in either method show up.

mod common;

use rek_core::connectivity::{
    classify, edge_connectivity, has_3_restricted_cut, lambda2, lambda3, Property,
    DEFAULT_ORACLE_LIMIT,
};
use rek_core::generators::{complete, cycle, path, star, subdivided_complete};
use rek_core::products::{k2_odot, strong_product};
use rek_core::{invariants, CutValue, Graph, Method, VertexSet};

struct Frozen {
    name: &'static str,
    graph: Graph,
    lambda: usize,
    lambda2: CutValue,
    lambda3: CutValue,
    xi3: Option<usize>,
}

fn strong(g: Graph, h: Graph) -> Graph {
    strong_product(&g, &h).unwrap().graph
}

fn corpus() -> Vec<Frozen> {
    use CutValue::{Finite, Infinite};
    vec![
        Frozen {
            name: "C5xC4",
            graph: strong(cycle(5).unwrap(), cycle(4).unwrap()),
            lambda: 8,
            lambda2: Finite(14),
            lambda3: Finite(18),
            xi3: Some(18),
        },
        Frozen {
            name: "C5xK4",
            graph: strong(cycle(5).unwrap(), complete(4).unwrap()),
            lambda: 11,
            lambda2: Finite(20),
            lambda3: Finite(27),
            xi3: Some(27),
        },
        Frozen {
            name: "subdivK4xC4",
            graph: strong(subdivided_complete(4, 0).unwrap(), cycle(4).unwrap()),
            lambda: 8,
            lambda2: Finite(14),
            lambda3: Finite(20),
            xi3: Some(20),
        },
        Frozen {
            name: "P3xK4",
            graph: strong(path(3).unwrap(), complete(4).unwrap()),
            lambda: 7,
            lambda2: Finite(12),
            lambda3: Finite(15),
            xi3: Some(15),
        },
        Frozen {
            name: "K4",
            graph: complete(4).unwrap(),
            lambda: 3,
            lambda2: Finite(4),
            lambda3: Infinite,
            xi3: Some(3),
        },
        Frozen {
            name: "C6",
            graph: cycle(6).unwrap(),
            lambda: 2,
            lambda2: Finite(2),
            lambda3: Finite(2),
            xi3: Some(2),
        },
        Frozen {
            name: "K1,4",
            graph: star(5).unwrap(),
            lambda: 1,
            lambda2: Infinite,
            lambda3: Infinite,
            xi3: Some(2),
        },
    ]
}

#[test]
fn frozen_values() {
    for f in corpus() {
        let g = &f.graph;
        assert_eq!(edge_connectivity(g).unwrap(), f.lambda, "{}", f.name);
        assert_eq!(invariants::xi3(g), f.xi3, "{}", f.name);
        for method in [Method::Flow, Method::Oracle] {
            let l2 = lambda2(g, method, DEFAULT_ORACLE_LIMIT).unwrap().value;
            let l3 = lambda3(g, method, DEFAULT_ORACLE_LIMIT).unwrap().value;
            assert_eq!(l2, f.lambda2, "{} {method}", f.name);
            assert_eq!(l3, f.lambda3, "{} {method}", f.name);
        }
        assert_eq!(
            has_3_restricted_cut(g),
            !f.lambda3.is_infinite(),
            "{}",
            f.name
        );
        if g.order() <= 12 {
            assert_eq!(common::lambda_k(g, 2), f.lambda2.finite(), "{}", f.name);
            assert_eq!(common::lambda_k(g, 3), f.lambda3.finite(), "{}", f.name);
        }
    }
}

#[test]
fn small_factor_values() {
    let k5 = complete(5).unwrap();
    let x = VertexSet::from_vertices(5, [0, 1, 2]).unwrap();
    assert_eq!(k5.boundary_size(&x), 6);
    assert_eq!(invariants::xi3(&k5), Some(6));

    let sk4 = subdivided_complete(4, 0).unwrap();
    assert_eq!((sk4.order(), sk4.size()), (5, 7));
    assert_eq!(invariants::min_degree(&sk4).unwrap(), 2);
    assert_eq!(invariants::max_degree(&sk4).unwrap(), 3);
    assert_eq!(invariants::xi(&sk4), Some(3));
    assert_eq!(edge_connectivity(&sk4).unwrap(), 2);
}

#[test]
fn product_sizes() {
    let c4c3 = strong_product(&cycle(4).unwrap(), &cycle(3).unwrap()).unwrap();
    assert!(c4c3.graph.degrees().all(|d| d == 8));
    assert_eq!(c4c3.graph.size(), 48);
    let c5c4 = strong_product(&cycle(5).unwrap(), &cycle(4).unwrap()).unwrap();
    assert_eq!((c5c4.order(), c5c4.graph.size()), (20, 80));

    let k2 = k2_odot(&complete(2).unwrap());
    assert_eq!((k2.order(), k2.graph.size()), (4, 4));
    assert!(k2.graph.degrees().all(|d| d == 2));
    let p3 = k2_odot(&path(3).unwrap());
    assert_eq!((p3.order(), p3.graph.size()), (6, 7));
}

#[test]
fn double_star_has_a_3_restricted_cut() {
    let g = Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
    assert!(has_3_restricted_cut(&g));
    assert_eq!(
        lambda3(&g, Method::Flow, 0).unwrap().value,
        CutValue::Finite(1)
    );
}

#[test]
fn classifier_examples() {
    let c6 = cycle(6).unwrap();
    let v = classify(&c6, Property::SuperEdgeConnected, DEFAULT_ORACLE_LIMIT).unwrap();
    assert_eq!(v.holds(), Some(false));
    let c5c4 = strong(cycle(5).unwrap(), cycle(4).unwrap());
    let v = classify(&c5c4, Property::Maximally3Restricted, DEFAULT_ORACLE_LIMIT).unwrap();
    assert_eq!(v.holds(), Some(true));
    let c5k4 = strong(cycle(5).unwrap(), complete(4).unwrap());
    let v = classify(&c5k4, Property::Maximally3Restricted, DEFAULT_ORACLE_LIMIT).unwrap();
    assert_eq!(v.holds(), Some(true));
}
