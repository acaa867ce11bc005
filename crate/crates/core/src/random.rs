//! Seeded generators for test corpora.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::chord::ChordDiagram;
use crate::dh::{DHSequence, DhOp};
use crate::euler::EulerDigraph;
use crate::graph::Graph;
use crate::planarsp::{SPSequence, SpOp};

/// `G(n, p)` on vertices `0..n`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::edgeless(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.set_edge_idx(i, j, true);
            }
        }
    }
    g
}

/// `G(n, p)` with each vertex looped independently with probability `loop_p`.
pub fn random_looped_graph(rng: &mut impl Rng, n: usize, p: f64, loop_p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    for i in 0..n {
        if rng.gen_bool(loop_p) {
            g.set_edge_idx(i, i, true);
        }
    }
    g
}

/// Rejection-sampled connected `G(n, p)`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Every simple graph on vertices `0..n`, by edge bitmask.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    assert!(pairs.len() < 64, "too many vertex pairs");
    (0..1u64 << pairs.len()).map(move |mask| graph_from_mask(n, &pairs, mask))
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::edgeless(n);
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.set_edge_idx(i, j, true);
        }
    }
    g
}

/// Uniform double-occurrence word on chords `c1..ck`.
pub fn random_chord_diagram(rng: &mut impl Rng, k: usize) -> ChordDiagram {
    let mut word: Vec<String> = (1..=k).flat_map(|i| [format!("c{i}"), format!("c{i}")]).collect();
    word.shuffle(rng);
    ChordDiagram::new(word).expect("each label twice")
}

/// Connected 2-in 2-out digraph on `0..n`: random pairing of out-stubs with
/// in-stubs, resampled until the support is connected.
pub fn random_euler_digraph(rng: &mut impl Rng, n: usize) -> EulerDigraph {
    assert!(n > 0);
    let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    loop {
        let mut heads: Vec<usize> = (0..2 * n).map(|s| s / 2).collect();
        heads.shuffle(rng);
        let arcs: Vec<(&str, &str)> = heads.iter().enumerate().map(|(s, &h)| (ids[s / 2].as_str(), ids[h].as_str())).collect();
        let g = EulerDigraph::new(&ids.iter().map(String::as_str).collect::<Vec<_>>(), &arcs).expect("degrees fixed");
        if g.is_connected() {
            return g;
        }
    }
}

/// Digon followed by `ops` uniformly chosen series or parallel steps.
pub fn random_sp_sequence(rng: &mut impl Rng, ops: usize) -> SPSequence {
    let mut out = vec![SpOp::Digon];
    for i in 1..=ops {
        let e = format!("e{}", rng.gen_range(1..=i + 1));
        out.push(if rng.gen_bool(0.5) { SpOp::Series(e) } else { SpOp::Parallel(e) });
    }
    SPSequence::new(out)
}

/// Construction sequence on vertices `0..n`, true twins allowed when
/// `true_twins` is set.
pub fn random_dh_sequence(rng: &mut impl Rng, n: usize, true_twins: bool) -> DHSequence {
    assert!(n > 0);
    let mut ops = vec![DhOp::Root { vertex: "0".into() }];
    for v in 1..n {
        let vertex = v.to_string();
        let anchor = rng.gen_range(0..v).to_string();
        let kinds = if v == 1 { 1 } else if true_twins { 3 } else { 2 };
        ops.push(match rng.gen_range(0..kinds) {
            0 => DhOp::Pendant { vertex, on: anchor },
            1 => DhOp::FalseTwin { vertex, of: anchor },
            _ => DhOp::TrueTwin { vertex, of: anchor },
        });
    }
    DHSequence::new(ops)
}

pub fn random_bdh_sequence(rng: &mut impl Rng, n: usize) -> DHSequence {
    random_dh_sequence(rng, n, false)
}
