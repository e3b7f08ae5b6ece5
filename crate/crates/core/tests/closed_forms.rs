//! Closed forms instantiated by hand, then checked against the engine.

use rek_core::connectivity::{edge_connectivity, lambda2, lambda3, DEFAULT_ORACLE_LIMIT};
use rek_core::generators::{complete, cycle, path, subdivided_complete};
use rek_core::products::strong_product;
use rek_core::theorem::{
    check_theorem, lifted_cut_bound, maximality_condition, predict_lambda2_strong_complete,
    predict_lambda2_strong_cycle, predict_lambda3_strong_complete, predict_lambda3_strong_cycle,
    CheckOptions, TheoremId, Verdict,
};
use rek_core::{invariants, CutValue, Graph, Method};

fn both_methods(g: &Graph, k: usize) -> CutValue {
    let run = |m| match k {
        2 => lambda2(g, m, DEFAULT_ORACLE_LIMIT).unwrap().value,
        _ => lambda3(g, m, DEFAULT_ORACLE_LIMIT).unwrap().value,
    };
    let flow = run(Method::Flow);
    assert_eq!(flow, run(Method::Oracle), "methods disagree");
    flow
}

#[test]
fn factor_connectivity() {
    for n in 3..=9 {
        assert_eq!(edge_connectivity(&cycle(n).unwrap()).unwrap(), 2);
        assert_eq!(edge_connectivity(&complete(n).unwrap()).unwrap(), n - 1);
    }
}

#[test]
fn lambda2_cycle_products() {
    // C5, n = 4: min{24, 30, 14}
    assert_eq!(predict_lambda2_strong_cycle(5, 5, 2, 2, 4), 14);
    // K4, n = 3: min{27, 32, 20}
    assert_eq!(predict_lambda2_strong_cycle(4, 6, 3, 3, 3), 20);

    let c5c4 = strong_product(&cycle(5).unwrap(), &cycle(4).unwrap()).unwrap();
    assert_eq!(both_methods(&c5c4.graph, 2), CutValue::Finite(14));
    let k4c3 = strong_product(&complete(4).unwrap(), &cycle(3).unwrap()).unwrap();
    assert_eq!(both_methods(&k4c3.graph, 2), CutValue::Finite(20));
}

#[test]
fn lambda2_complete_products() {
    // C5, n = 4: min{32, 45, 20}
    assert_eq!(predict_lambda2_strong_complete(5, 5, 2, 2, 4), 20);
    // K4, n = 4: min{48, 48, 28}
    assert_eq!(predict_lambda2_strong_complete(4, 6, 3, 3, 4), 28);

    let c5k4 = strong_product(&cycle(5).unwrap(), &complete(4).unwrap()).unwrap();
    assert_eq!(both_methods(&c5k4.graph, 2), CutValue::Finite(20));
    let k4k4 = strong_product(&complete(4).unwrap(), &complete(4).unwrap()).unwrap();
    assert_eq!(both_methods(&k4k4.graph, 2), CutValue::Finite(28));
}

#[test]
fn lambda3_cycle_branches() {
    assert_eq!(predict_lambda3_strong_cycle(2, 2), 18);
    assert_eq!(predict_lambda3_strong_cycle(2, 3), 20);
    assert_eq!(predict_lambda3_strong_cycle(4, 6), 36);
    assert_eq!(invariants::xi3_strong_cycle_formula(2, 2).unwrap(), 18);
    assert_eq!(invariants::xi3_strong_cycle_formula(2, 3).unwrap(), 20);

    let c4 = cycle(4).unwrap();
    let cases = [
        (cycle(5).unwrap(), 18),
        (subdivided_complete(4, 0).unwrap(), 20),
        (complete(5).unwrap(), 36),
    ];
    for (g, expected) in cases {
        let p = strong_product(&g, &c4).unwrap();
        assert_eq!(both_methods(&p.graph, 3), CutValue::Finite(expected));
        assert_eq!(invariants::xi3(&p.graph), Some(expected));
    }
}

#[test]
fn lambda3_complete_products() {
    // C5: min{32, 45, 27}; K3: min{32, 27, 27}; P3: min{16, 21, 15}
    assert_eq!(predict_lambda3_strong_complete(5, 5, 2, 4), 27);
    assert_eq!(predict_lambda3_strong_complete(3, 3, 2, 4), 27);
    assert_eq!(predict_lambda3_strong_complete(3, 2, 1, 4), 15);
    assert!(maximality_condition(5, 5, 2, 4));

    let k4 = complete(4).unwrap();
    let cases = [
        (cycle(5).unwrap(), 27),
        (complete(3).unwrap(), 27),
        (path(3).unwrap(), 15),
    ];
    for (g, expected) in cases {
        let p = strong_product(&g, &k4).unwrap();
        assert_eq!(both_methods(&p.graph, 3), CutValue::Finite(expected));
    }
    let p = strong_product(&cycle(5).unwrap(), &k4).unwrap();
    assert_eq!(invariants::xi3(&p.graph), Some(27));
}

#[test]
fn xi3_of_complete_products_matches_enumeration() {
    for g in [
        cycle(5).unwrap(),
        complete(3).unwrap(),
        path(3).unwrap(),
        cycle(6).unwrap(),
    ] {
        let delta = invariants::min_degree(&g).unwrap();
        for n in 4..=5 {
            let p = strong_product(&g, &complete(n).unwrap()).unwrap();
            assert_eq!(
                invariants::xi3(&p.graph),
                Some(invariants::xi3_strong_complete_formula(delta, n))
            );
        }
    }
}

#[test]
fn lifted_upper_bounds() {
    let c5 = cycle(5).unwrap();
    let cases = [(cycle(4).unwrap(), 24), (complete(4).unwrap(), 32)];
    for (h, expected) in cases {
        let bound = lifted_cut_bound(&c5, &h).unwrap();
        assert_eq!(bound.value, expected);
        let p = strong_product(&c5, &h).unwrap();
        for w in [&bound.left_witness, &bound.right_witness] {
            assert!(rek_core::connectivity::is_restricted_cut(
                &p.graph, &w.edges, 3
            ));
        }
        assert!(both_methods(&p.graph, 3) <= CutValue::Finite(expected));
    }
}

#[test]
fn verdicts_on_the_worked_instances() {
    let c5 = cycle(5).unwrap();
    let options = CheckOptions::default();
    let report = check_theorem(TheoremId::T31, &c5, Some(4), &options).unwrap();
    assert_eq!(report.verdict, Verdict::Confirmed);
    assert_eq!(report.predicted.value, CutValue::Finite(18));
    assert_eq!(report.computed, Some(CutValue::Finite(18)));

    let report = check_theorem(TheoremId::C33, &c5, Some(4), &options).unwrap();
    assert_eq!(report.verdict, Verdict::Confirmed);
    assert_eq!(report.computed, Some(CutValue::Finite(27)));

    let sk4 = subdivided_complete(4, 0).unwrap();
    let report = check_theorem(TheoremId::T31, &sk4, Some(4), &options).unwrap();
    assert_eq!(report.predicted.value, CutValue::Finite(20));
    assert_eq!(report.verdict, Verdict::Confirmed);
}
