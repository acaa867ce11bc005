use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use interlace_core::dh::{
    apply_sequence, bdh_to_sp, gamma_fast, is_bdh, is_bipartite_62_chordal, qn_bdh_fast, recognize_dh,
    structural_checks, Recognition,
};
use interlace_core::interlace::{gamma, qn_recursive, X};
use interlace_core::random::{all_labeled_graphs, random_bdh_sequence, random_dh_sequence};
use interlace_core::{Graph, SparsePoly};

#[test]
fn recognition_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let n = rng.gen_range(1..=15);
        let g = apply_sequence(&random_dh_sequence(&mut rng, n, true)).unwrap();
        let Recognition::Accepted(seq) = recognize_dh(&g).unwrap() else { panic!("{g:?}") };
        assert_eq!(apply_sequence(&seq).unwrap(), g);
    }
}

#[test]
fn gamma_formula_over_random_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let seq = random_dh_sequence(&mut rng, n, true);
        assert_eq!(gamma_fast(&seq).unwrap(), gamma(&apply_sequence(&seq).unwrap()).unwrap(), "{seq}");
    }
}

#[test]
fn peeling_agrees_with_bipartite_62_chordality() {
    for n in 1..=6 {
        for g in all_labeled_graphs(n).filter(Graph::is_connected) {
            assert_eq!(is_bdh(&g).unwrap(), is_bipartite_62_chordal(&g).unwrap(), "{g:?}");
        }
    }
}

#[test]
fn power_of_two_gamma_does_not_imply_distance_hereditary() {
    let c6 = Graph::cycle(6);
    assert_eq!(gamma(&c6).unwrap(), 4.into());
    assert!(matches!(recognize_dh(&c6).unwrap(), Recognition::Rejected { .. }));
}

#[test]
fn structural_identities_hold() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..100 {
        let n = rng.gen_range(2..=10);
        let seq = random_dh_sequence(&mut rng, n, i % 2 == 0);
        let g = apply_sequence(&seq).unwrap();
        let r = structural_checks(&g, &seq, i, 20).unwrap();
        assert!(r.holds(), "{seq}{r:?}");
    }
}

#[test]
fn fast_path_matches_recursion() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..150 {
        let n = rng.gen_range(1..=12);
        let g = apply_sequence(&random_bdh_sequence(&mut rng, n)).unwrap();
        assert_eq!(qn_bdh_fast(&g).unwrap(), qn_recursive(&g).unwrap(), "{g:?}");
    }
}

#[test]
fn translation_maps_every_vertex_to_a_distinct_edge() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let seq = random_bdh_sequence(&mut rng, 20);
    let t = bdh_to_sp(&seq).unwrap();
    let mut edges: Vec<&String> = t.edge_of.iter().map(|(_, e)| e).collect();
    edges.sort();
    edges.dedup();
    assert_eq!(edges.len(), 20);
    assert_eq!(t.sequence.edge_count(), 20);
}

/// Pendant recursion `q_N(T) = q_N(T-w) + x q_N(T-w-u)` for a leaf `w` on `u`,
/// multiplied over components and memoised on vertex sets.
fn qn_forest(g: &Graph, memo: &mut HashMap<Vec<String>, SparsePoly>) -> SparsePoly {
    let mut out = SparsePoly::one(&X);
    for comp in g.components() {
        let t = g.induced_idx(&comp);
        out = &out * &qn_tree(&t, memo);
    }
    out
}

fn qn_tree(t: &Graph, memo: &mut HashMap<Vec<String>, SparsePoly>) -> SparsePoly {
    let x = SparsePoly::var(&X, "x").unwrap();
    if t.order() == 1 {
        return x;
    }
    let mut key: Vec<String> = t.vertex_ids().to_vec();
    key.sort();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let w = (0..t.order()).rev().find(|&v| t.degree_idx(v) == 1).expect("trees have leaves");
    let u = t.neighbors_idx(w).first().unwrap();
    let without_w = t.remove_idx(w);
    let without_both = t.induced_idx(&(0..t.order()).filter(|&v| v != w && v != u).collect::<Vec<_>>());
    let p = &qn_tree(&without_w, memo) + &(&x * &qn_forest(&without_both, memo));
    memo.insert(key, p.clone());
    p
}

fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::edgeless(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(&u.to_string(), &v.to_string()).unwrap();
    }
    g
}

#[test]
fn fifty_vertex_trees_match_pendant_recursion() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..5 {
        let t = random_tree(&mut rng, 50);
        let mut memo = HashMap::new();
        assert_eq!(qn_bdh_fast(&t).unwrap(), qn_tree(&t, &mut memo));
    }
    let mut memo = HashMap::new();
    assert_eq!(qn_bdh_fast(&Graph::path(50)).unwrap(), qn_tree(&Graph::path(50), &mut memo));
}

#[test]
fn rejects_non_bdh_input_with_reason() {
    let err = qn_bdh_fast(&Graph::complete(3)).unwrap_err();
    assert!(err.to_string().contains("true twin"), "{err}");
    let err = qn_bdh_fast(&Graph::cycle(6)).unwrap_err();
    assert!(err.to_string().contains("not distance-hereditary"), "{err}");
}
