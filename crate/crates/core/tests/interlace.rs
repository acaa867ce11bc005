use num_bigint::BigInt;
use proptest::prelude::*;

use interlace_core::interlace::{
    gamma, q_recursive, q_recursive_with, q_statesum, qn_from_q, qn_recursive, qn_statesum, ReductionOrder,
};
use interlace_core::{Error, Graph};

fn graph_strategy(max_n: usize, loops: bool) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n + 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::edgeless(n);
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    if bits[k] && (i != j || loops) {
                        g.add_edge(&i.to_string(), &j.to_string()).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn both_reduction_orders_agree_with_state_sum(g in graph_strategy(8, true)) {
        let q = q_statesum(&g).unwrap();
        prop_assert_eq!(q_recursive_with(&g, ReductionOrder::PivotFirst), q.clone());
        prop_assert_eq!(q_recursive_with(&g, ReductionOrder::LoopFirst), q);
    }

    #[test]
    fn vertex_nullity_three_ways(g in graph_strategy(9, false)) {
        let qn = qn_statesum(&g).unwrap();
        prop_assert_eq!(qn_recursive(&g).unwrap(), qn.clone());
        prop_assert_eq!(qn_from_q(&g).unwrap(), qn);
    }

    #[test]
    fn local_complement_and_pivot_relation(g in graph_strategy(7, false)) {
        // ((G^u)^v)^u is the pivot with the labels u and v exchanged
        for (u, v) in g.edges() {
            let lhs = g.pivot(u, v).unwrap();
            let lc = g.local_complement(u).unwrap().local_complement(v).unwrap().local_complement(u).unwrap();
            let swap = |w: &str| if w == u { v.to_string() } else if w == v { u.to_string() } else { w.to_string() };
            let mut rhs = Graph::with_vertices(lc.vertex_ids().iter().cloned()).unwrap();
            for (a, b) in lc.edges() {
                rhs.add_edge(&swap(a), &swap(b)).unwrap();
            }
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gamma_vanishes_exactly_on_disconnected_graphs(g in graph_strategy(8, false)) {
        let zero = gamma(&g).unwrap() == BigInt::from(0);
        prop_assert_eq!(zero, !g.is_connected());
    }
}

#[test]
fn vertex_nullity_rejects_loops() {
    let g = Graph::from_edges(&[("a", "a"), ("a", "b")]);
    assert_eq!(qn_recursive(&g), Err(Error::LoopsNotAllowed("a".into())));
    assert!(q_recursive(&g).terms().count() > 0);
}

#[test]
fn edge_list_errors_report_lines() {
    let err = Graph::parse_edge_list("a b\nb c d\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
}

#[test]
fn state_sum_size_guard() {
    assert_eq!(q_statesum(&Graph::edgeless(31)), Err(Error::TooLarge(31)));
}
