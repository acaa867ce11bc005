use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_interlace")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const C6: &str = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";

#[test]
fn cycle_vertex_nullity_by_every_method() {
    let c6 = fixture("c6.txt", C6);
    for method in ["recursion", "specialize", "state-sum"] {
        let o = run(&["qn", "--edges", c6.to_str().unwrap(), "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), "2*x^3 + 10*x^2 + 4*x\n");
    }
    // C_6 is bipartite but not distance-hereditary
    let o = run(&["qn", "--edges", c6.to_str().unwrap(), "--method", "bdh-fast"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not distance-hereditary"), "{}", stderr(&o));
}

#[test]
fn single_edge_gamma() {
    let k2 = fixture("k2.txt", "a b\n");
    let o = run(&["gamma", "--edges", k2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn two_variable_methods_agree() {
    let g = fixture("looped.txt", "a a\na b\nb c\nc a\n");
    let a = run(&["q", "--edges", g.to_str().unwrap(), "--method", "state-sum"]);
    let b = run(&["q", "--edges", g.to_str().unwrap(), "--method", "recursion"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn digon_satisfies_the_diagonal_identity() {
    let digon = fixture("digon.sp", "digon\n");
    let o = run(&["verify", "theorem-b", "--sp", digon.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("q_N=2x = t(G;x,x)"), "{}", stdout(&o));
    assert!(stdout(&o).contains("gamma=2 = 2*beta=2"), "{}", stdout(&o));
}

#[test]
fn json_wraps_input_method_result_and_time() {
    let c6 = fixture("c6-json.txt", C6);
    let o = run(&["--format", "json", "qn", "--edges", c6.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["method"], "recursion");
    assert!(v["input"].as_str().unwrap().ends_with("c6-json.txt"));
    assert!(v["elapsed_ms"].as_f64().unwrap() >= 0.0);
    let terms = v["result"].as_array().unwrap();
    let coeffs: Vec<(u64, &str)> =
        terms.iter().map(|t| (t["exps"]["x"].as_u64().unwrap(), t["coeff"].as_str().unwrap())).collect();
    let mut coeffs = coeffs;
    coeffs.sort();
    assert_eq!(coeffs, vec![(1, "4"), (2, "10"), (3, "2")]);
}

#[test]
fn malformed_files_give_line_numbers_and_exit_two() {
    let bad = fixture("bad.txt", "a b\nb c d\n");
    let o = run(&["gamma", "--edges", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let bad_sp = fixture("bad.sp", "digon\nseries e1\nloop e2\n");
    let o = run(&["tutte-diag-sp", "--sp", bad_sp.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["qn"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["gamma", "--edges", "x", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["gamma", "--edges", "/nonexistent/file"]).status.code(), Some(2));
    let o = run(&["verify", "identities"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--seed"));
}

#[test]
fn tutte_and_beta_of_a_triangle() {
    let tri = fixture("c3.sp", "digon\nseries e1\n");
    let t = run(&["tutte", "--sp", tri.to_str().unwrap()]);
    assert_eq!(t.status.code(), Some(0), "{}", stderr(&t));
    assert_eq!(stdout(&t), "x^2 + x + y\n");
    let b = run(&["beta", "--sp", tri.to_str().unwrap()]);
    assert_eq!(stdout(&b), "1\n");
    let d = run(&["tutte-diag-sp", "--sp", tri.to_str().unwrap()]);
    assert_eq!(stdout(&d), "x^2 + 2*x\n");
}

#[test]
fn medial_feeds_circuit_partition_and_circle_graph() {
    let tri = fixture("c3-medial.sp", "digon\nseries e1\n");
    let m = run(&["medial", "--sp", tri.to_str().unwrap()]);
    assert_eq!(m.status.code(), Some(0), "{}", stderr(&m));
    let arcs = fixture("c3-medial.arcs", &stdout(&m));
    assert_eq!(stdout(&m).lines().count(), 6);

    let f = run(&["cpp", "--arcs", arcs.to_str().unwrap()]);
    assert_eq!(f.status.code(), Some(0));
    let a = run(&["verify", "theorem-a", "--arcs", arcs.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(stdout(&a).contains(&format!("f={}", stdout(&f).trim())));

    let e = run(&["euler-circuit", "--arcs", arcs.to_str().unwrap()]);
    let circuit = stdout(&e).lines().next().unwrap().trim_start_matches("arcs: ").to_string();
    let h = run(&["circle-graph", "--arcs", arcs.to_str().unwrap(), "--circuit", &circuit]);
    assert_eq!(h.status.code(), Some(0), "{}", stderr(&h));
    let bad = run(&["circle-graph", "--arcs", arcs.to_str().unwrap(), "--circuit", "0 0 0 0 0 0"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn circle_graph_of_a_word() {
    let o = run(&["circle-graph", "--word", "a b a c b c"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let edges: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(edges, vec!["a b", "b c"]);
}

#[test]
fn distance_hereditary_commands() {
    let path = fixture("p4.txt", "a b\nb c\nc d\n");
    let r = run(&["dh", "recognize", "--edges", path.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert!(stdout(&r).starts_with("root "), "{}", stdout(&r));
    let b = run(&["dh", "is-bdh", "--edges", path.to_str().unwrap()]);
    assert!(stdout(&b).starts_with("yes"));

    let k3 = fixture("k3.txt", "a b\nb c\nc a\n");
    let b = run(&["dh", "is-bdh", "--edges", k3.to_str().unwrap()]);
    assert_eq!(b.status.code(), Some(0));
    assert!(stdout(&b).starts_with("no: distance-hereditary but needs"), "{}", stdout(&b));

    let sp = run(&["dh", "to-sp", "--edges", path.to_str().unwrap()]);
    assert_eq!(sp.status.code(), Some(0), "{}", stderr(&sp));
    let sp_file = fixture("p4.sp", &stdout(&sp));
    let diag = run(&["tutte-diag-sp", "--sp", sp_file.to_str().unwrap()]);
    let qn = run(&["qn", "--edges", path.to_str().unwrap()]);
    assert_eq!(stdout(&diag), stdout(&qn));

    let seq = fixture("p4.dh", "root a\npendant b on a\npendant c on b\nfalsetwin d of b\n");
    assert_eq!(run(&["dh", "to-sp", "--dh", seq.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["dh", "to-sp", "--edges", k3.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn seeded_suites_are_deterministic() {
    let a = run(&["verify", "theorem-b", "--seed", "3", "--count", "10"]);
    let b = run(&["verify", "theorem-b", "--seed", "3", "--count", "10"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(run(&["verify", "theorem-a", "--seed", "3", "--count", "5"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "cpoly", "--seed", "3", "--count", "5"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "identities", "--seed", "3", "--count", "5"]).status.code(), Some(0));
}

#[test]
fn single_chord_cpoly_check() {
    let o = run(&["verify", "cpoly", "--word", "a b a b"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("verified\n"));
}
