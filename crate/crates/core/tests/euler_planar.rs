use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use interlace_core::euler::{state_count, verify_theorem_a, EulerDigraph};
use interlace_core::interlace::qn_statesum;
use interlace_core::planarsp::{
    build_sp, tutte, tutte_diagonal, tutte_diagonal_sp, verify_theorem_b_sp, PlaneMultigraph, SPSequence,
};
use interlace_core::random::{random_euler_digraph, random_sp_sequence};

#[test]
fn hierholzer_circuits_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let n = rng.gen_range(1..=12);
        let g = random_euler_digraph(&mut rng, n);
        let c = g.euler_circuit().unwrap();
        g.check_circuit(&c).unwrap();
        let word = g.chord_word_from_circuit(&c).unwrap();
        assert_eq!(word.chord_count(), n);
    }
}

#[test]
fn state_counts_and_lowest_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let g = random_euler_digraph(&mut rng, n);
        let f = g.circuit_partition_poly().unwrap();
        assert_eq!(state_count(&f), BigInt::from(1u64 << n));
        assert!(f.min_degree_in("x").unwrap().unwrap() >= 1);
    }
}

#[test]
fn circle_graph_polynomial_is_circuit_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let n = rng.gen_range(1..=5);
        let g = random_euler_digraph(&mut rng, n);
        let r = verify_theorem_a(&g, 5).unwrap();
        assert!(r.exhaustive && r.holds(), "{r:?}");
        assert_eq!(r.circuits_checked, g.all_euler_circuits().unwrap().len());
    }
}

#[test]
fn arc_list_parse_errors_are_line_numbered() {
    let err = EulerDigraph::parse("a -> a\na -> \n").unwrap_err();
    assert_eq!(err.to_string(), "line 2: expected `u -> v`, found `a ->`");
}

fn spanning_trees(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut count = 0;
    for mask in 0u32..1 << edges.len() {
        if mask.count_ones() as usize + 1 != n {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] == x {
                x
            } else {
                let r = find(p, p[x]);
                p[x] = r;
                r
            }
        }
        let mut acyclic = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    acyclic = false;
                    break;
                }
                parent[a] = b;
            }
        }
        count += u64::from(acyclic);
    }
    count
}

#[test]
fn tutte_at_one_one_counts_spanning_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let ops = rng.gen_range(0..=9);
        let g = build_sp(&random_sp_sequence(&mut rng, ops)).unwrap();
        let t = g.tutte().eval_at(&[("x", 1), ("y", 1)]).unwrap();
        assert_eq!(t, BigInt::from(spanning_trees(g.vertex_count(), &g.edge_list())));
    }
}

#[test]
fn fast_diagonal_matches_deletion_contraction() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let ops = rng.gen_range(0..=10);
        let seq = random_sp_sequence(&mut rng, ops);
        let g = build_sp(&seq).unwrap();
        assert_eq!(tutte_diagonal_sp(&seq).unwrap(), tutte_diagonal(&g.tutte()).unwrap(), "{seq}");
    }
}

#[test]
fn series_parallel_swap_keeps_the_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..60 {
        let ops = rng.gen_range(0..=12);
        let seq = random_sp_sequence(&mut rng, ops);
        assert_eq!(tutte_diagonal_sp(&seq).unwrap(), tutte_diagonal_sp(&seq.dual()).unwrap());
    }
}

#[test]
fn built_graphs_are_plane_and_medials_are_two_in_two_out() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let ops = rng.gen_range(0..=12);
        let g = build_sp(&random_sp_sequence(&mut rng, ops)).unwrap();
        let (v, e, f) = (g.vertex_count() as i64, g.edge_count() as i64, g.face_count() as i64);
        assert_eq!(v - e + f, 2);
        let m = g.medial_digraph().unwrap();
        assert_eq!(m.vertex_count(), g.edge_count());
        assert_eq!(m.arc_count(), 2 * g.edge_count());
    }
}

#[test]
fn medial_circle_graph_matches_tutte_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..40 {
        let ops = rng.gen_range(0..=8);
        let seq = random_sp_sequence(&mut rng, ops);
        let r = verify_theorem_b_sp(&seq).unwrap();
        assert!(r.holds(), "{seq}{r:?}");
        assert_eq!(r.beta, BigInt::from(1));
    }
}

#[test]
fn wheel_is_not_series_parallel_but_satisfies_the_diagonal_identity() {
    // wheel with four spokes
    let text = "c: s1 s2 s3 s4\n1: s1 r41 r12\n2: s2 r12 r23\n3: s3 r23 r34\n4: s4 r34 r41\n";
    let g = PlaneMultigraph::parse(text).unwrap();
    let m = g.medial_digraph().unwrap();
    let word = m.chord_word_from_circuit(&m.euler_circuit().unwrap()).unwrap();
    let t = tutte(g.vertex_count(), &g.edge_list());
    assert_eq!(qn_statesum(&word.circle_graph()).unwrap(), tutte_diagonal(&t).unwrap());
    assert!(g.beta().unwrap() > BigInt::from(1));
}

#[test]
fn sp_sequence_text_round_trip() {
    let seq = SPSequence::parse("digon\nseries e1\nparallel e3\n").unwrap();
    assert_eq!(SPSequence::parse(&seq.to_string()).unwrap(), seq);
    assert!(SPSequence::parse("digon\nloop e1").is_err());
}
