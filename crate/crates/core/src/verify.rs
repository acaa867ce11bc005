//! Seeded verification suites over random and exhaustive corpora.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chord::{verify_cpoly_identity, ChordDiagram, DEFAULT_SQUARE_POINTS};
use crate::dh::{
    apply_sequence, gamma_fast, is_bdh, qn_bdh_fast, recognize_dh, recognize_dh_random, Recognition,
};
use crate::error::Result;
use crate::euler::verify_theorem_a;
use crate::graph::Graph;
use crate::interlace::{
    coefficient_checks, gamma, q_recursive, q_statesum, qn_from_q, qn_recursive, qn_statesum, X, XY,
};
use crate::planarsp::{verify_theorem_b_sp, SPSequence};
use crate::poly::SparsePoly;
use crate::random::{
    all_labeled_graphs, random_bdh_sequence, random_chord_diagram, random_connected_graph, random_dh_sequence,
    random_euler_digraph, random_graph, random_looped_graph, random_sp_sequence,
};

/// Outcome of one suite: how many cases ran and a line per failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, cases: usize, failures: Vec<String>) {
        self.cases += cases;
        self.failures.extend(failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{}: {} ({} cases, {} failures)", self.name, status, self.cases, self.failures.len())?;
        for line in self.failures.iter().take(10) {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

fn edges_of(g: &Graph) -> String {
    g.to_edge_list().trim_end().replace('\n', ", ")
}

fn x() -> SparsePoly {
    SparsePoly::var(&X, "x").expect("x")
}

/// Values quoted for `C_6`, `K_2` and stars.
pub fn reference_values() -> Result<SuiteReport> {
    let mut r = SuiteReport::new("reference values");
    let qn = qn_recursive(&Graph::cycle(6))?;
    r.check(qn.to_string() == "2*x^3 + 10*x^2 + 4*x", || format!("q_N(C_6) = {qn}"));
    let g = gamma(&Graph::cycle(6))?;
    r.check(g == BigInt::from(4), || format!("γ(C_6) = {g}"));
    for m in 1..=6 {
        let g = gamma(&Graph::star(m))?;
        r.check(g == BigInt::from(2), || format!("γ(K_1,{m}) = {g}"));
    }
    let g = gamma(&Graph::complete(2))?;
    r.check(g == BigInt::from(2), || format!("γ(K_2) = {g}"));
    Ok(r)
}

fn oracle_case(g: &Graph) -> Result<Option<String>> {
    let q = q_statesum(g)?;
    if q_recursive(g) != q {
        return Ok(Some(format!("q mismatch on [{}]", edges_of(g))));
    }
    if g.is_simple() && qn_recursive(g)? != qn_from_q(g)? {
        return Ok(Some(format!("q_N mismatch on [{}]", edges_of(g))));
    }
    Ok(None)
}

fn run_cases(graphs: Vec<Graph>, case: impl Fn(&Graph) -> Result<Option<String>> + Sync) -> Result<(usize, Vec<String>)> {
    let outcomes = graphs.par_iter().map(&case).collect::<Result<Vec<_>>>()?;
    Ok((graphs.len(), outcomes.into_iter().flatten().collect()))
}

/// Recursion against state sum, exhaustively up to `exhaustive_order` vertices,
/// then on random simple (`n ≤ 10`) and looped (`n ≤ 8`) graphs.
pub fn oracle_suite(seed: u64, exhaustive_order: usize, simple: usize, looped: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("oracle equivalence");
    for n in 0..=exhaustive_order {
        let (c, f) = run_cases(all_labeled_graphs(n).collect(), oracle_case)?;
        r.merge(c, f);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = Vec::new();
    for _ in 0..simple {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.9);
        graphs.push(random_graph(&mut rng, n, p));
    }
    for _ in 0..looped {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        graphs.push(random_looped_graph(&mut rng, n, p, 0.4));
    }
    let (c, f) = run_cases(graphs, oracle_case)?;
    r.merge(c, f);
    Ok(r)
}

/// Circuit partition polynomial against circle graphs of Euler circuits.
pub fn theorem_a_suite(seed: u64, count: usize, max_vertices: usize, exhaustive_up_to: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("circuit partition vs circle graph");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let n = rng.gen_range(1..=max_vertices);
        let g = random_euler_digraph(&mut rng, n);
        let report = verify_theorem_a(&g, exhaustive_up_to)?;
        r.check(report.holds(), || format!("[{}]: {report:?}", g.to_arc_list().trim_end().replace('\n', ", ")));
    }
    Ok(r)
}

/// Medial circle graph against the Tutte diagonal and `γ = 2β`.
pub fn theorem_b_suite(seed: u64, count: usize, max_ops: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("circle graph vs Tutte diagonal");
    let mut seqs: Vec<SPSequence> = ["digon", "digon\nseries e2", "digon\nparallel e1"]
        .iter()
        .map(|s| SPSequence::parse(s).expect("literal"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let ops = rng.gen_range(0..max_ops);
        seqs.push(random_sp_sequence(&mut rng, ops));
    }
    let outcomes = seqs
        .par_iter()
        .map(|s| {
            let report = verify_theorem_b_sp(s)?;
            Ok((report.holds(), s, report))
        })
        .collect::<Result<Vec<_>>>()?;
    for (ok, s, report) in outcomes {
        r.check(ok, || format!("[{}]: {report:?}", s.to_string().trim_end().replace('\n', ", ")));
    }
    Ok(r)
}

fn gamma_two_case(g: &Graph) -> Result<Option<String>> {
    let two = gamma(g)? == BigInt::from(2);
    let bdh = is_bdh(g)? && g.order() >= 2;
    Ok((two != bdh).then(|| format!("γ = 2 is {two} but BDH is {bdh} on [{}]", edges_of(g))))
}

/// `γ = 2` exactly on connected BDH graphs with at least two vertices.
pub fn gamma_two_suite(seed: u64, exhaustive_order: usize, samples: usize, sample_order: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("γ = 2 characterisation");
    for n in 1..=exhaustive_order {
        let graphs: Vec<Graph> = all_labeled_graphs(n).filter(Graph::is_connected).collect();
        let (c, f) = run_cases(graphs, gamma_two_case)?;
        r.merge(c, f);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = Vec::with_capacity(samples);
    for i in 0..samples {
        // alternate dense samples with BDH constructions so both sides are exercised
        if i % 2 == 0 {
            let p = rng.gen_range(0.2..0.8);
            graphs.push(random_connected_graph(&mut rng, sample_order, p));
        } else {
            graphs.push(apply_sequence(&random_bdh_sequence(&mut rng, sample_order))?);
        }
    }
    let (c, f) = run_cases(graphs, gamma_two_case)?;
    r.merge(c, f);
    let c6 = Graph::cycle(6);
    let rejected = matches!(recognize_dh(&c6)?, Recognition::Rejected { .. });
    r.check(gamma(&c6)? == BigInt::from(4) && rejected, || "C_6 witness failed".into());
    Ok(r)
}

/// `γ = 2^(t+1)` and a peel-order independent true-twin count.
pub fn twin_suite(seed: u64, count: usize, max_order: usize, peel_orders: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("true-twin count and γ");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let n = rng.gen_range(2..=max_order);
        let seq = random_dh_sequence(&mut rng, n, true);
        let g = apply_sequence(&seq)?;
        let t = seq.true_twin_count();
        let fast = gamma_fast(&seq)?;
        let slow = gamma(&g)?;
        r.check(fast == slow, || format!("γ = {slow} but 2^(t+1) = {fast} for\n{seq}"));
        for _ in 0..peel_orders {
            let peeled = match recognize_dh_random(&g, &mut rng)? {
                Recognition::Accepted(s) => Some(s.true_twin_count()),
                Recognition::Rejected { .. } => None,
            };
            r.check(peeled == Some(t), || format!("peel gave {peeled:?} true twins, built with {t}:\n{seq}"));
        }
    }
    Ok(r)
}

/// The interlace polynomial of a circle graph against the C-polynomial.
pub fn cpoly_suite(seed: u64, count: usize, max_chords: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("C-polynomial identity");
    let k2 = ChordDiagram::parse("a b a b")?;
    let worked = verify_cpoly_identity(&k2, &[(3, 4)])?;
    let p = &worked.points[0];
    r.check(worked.holds() && p.c_value == BigInt::from(43), || format!("K_2 worked case: {worked:?}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let k = rng.gen_range(1..=max_chords);
        let d = random_chord_diagram(&mut rng, k);
        let report = verify_cpoly_identity(&d, &DEFAULT_SQUARE_POINTS)?;
        r.check(report.holds(), || format!("{d}: {report:?}"));
    }
    Ok(r)
}

fn add_vertex_like(g: &Graph, anchor: usize, closed: bool, pendant: bool) -> Graph {
    let mut h = g.clone();
    let w = h.add_vertex(format!("w{}", g.order())).expect("fresh id");
    if pendant {
        h.set_edge_idx(w, anchor, true);
    } else {
        for u in g.neighbors_idx(anchor).iter() {
            h.set_edge_idx(w, u, true);
        }
        if closed {
            h.set_edge_idx(w, anchor, true);
        }
    }
    h
}

fn xy_poly(terms: &[(u32, u32, i64)]) -> SparsePoly {
    SparsePoly::from_terms(&XY, terms.iter().map(|&(a, b, c)| (vec![a, b], c)))
}

/// Identity checks on one random instance; returns the failing identities.
fn identity_case(rng: &mut ChaCha8Rng, max_order: usize) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let n = rng.gen_range(2..=max_order);
    let p = rng.gen_range(0.2..0.8);
    let g = random_graph(rng, n, p);
    let m = rng.gen_range(1..=4);
    let f = random_graph(rng, m, 0.5);
    let label = edges_of(&g);
    let mut fail = |ok: bool, name: &str| {
        if !ok {
            fails.push(format!("{name} on [{label}]"));
        }
    };

    let q = q_recursive(&g);
    let qn = qn_recursive(&g)?;
    let edges = g.edges_idx();
    if let Some(&(u, v)) = edges.get(rng.gen_range(0..edges.len().max(1))) {
        fail(qn_recursive(&g.pivot(g.id(u), g.id(v))?)? == qn, "pivot invariance");
    }
    let union = g.disjoint_union(&f);
    fail(q_recursive(&union) == &q * &q_recursive(&f), "q multiplicative on unions");
    fail(qn_recursive(&union)? == &qn * &qn_recursive(&f)?, "q_N multiplicative on unions");
    fail(qn.terms().all(|(_, c)| c.is_positive()), "q_N coefficients positive");
    fail(coefficient_checks(&g)?.holds(), "coefficient identities");
    let lowest = qn.min_degree_in("x")?.unwrap_or(0) as usize;
    fail(lowest == g.component_count(), "lowest degree = components");

    let u = rng.gen_range(0..n);
    let g_u = g.remove_idx(u);
    let pendant = add_vertex_like(&g, u, false, true);
    let shift = xy_poly(&[(2, 0, 1), (1, 0, -2), (0, 1, 1)]);
    fail(q_recursive(&pendant) == &q + &(&shift * &q_recursive(&g_u)), "pendant q recursion");
    fail(qn_recursive(&pendant)? == &qn + &(&x() * &qn_recursive(&g_u)?), "pendant q_N recursion");

    let non_isolated: Vec<usize> = (0..n).filter(|&v| g.degree_idx(v) > 0).collect();
    if let Some(&v) = non_isolated.get(rng.gen_range(0..non_isolated.len().max(1))) {
        let g_v = g.remove_idx(v);
        let q_gv = q_recursive(&g_v);
        let y = xy_poly(&[(0, 1, 1)]);
        let false_twin = add_vertex_like(&g, v, false, false);
        fail(q_recursive(&false_twin) == &q + &(&y * &(&q - &q_gv)), "false twin q recursion");
        let nbrs: Vec<usize> = g.neighbors_idx(v).iter().collect();
        let u = nbrs[rng.gen_range(0..nbrs.len())];
        let pivoted = g.pivot(g.id(u), g.id(v))?.remove_vertex(g.id(u))?;
        fail(
            qn_recursive(&false_twin)? == &qn + &(&x() * &qn_recursive(&pivoted)?),
            "false twin q_N recursion",
        );
        let true_twin = add_vertex_like(&g, v, true, false);
        let x2 = xy_poly(&[(2, 0, 1), (1, 0, -2)]);
        fail(
            q_recursive(&true_twin) == &q.scale(&BigInt::from(2)) + &(&x2 * &q_gv),
            "true twin q recursion",
        );
        fail(qn_recursive(&true_twin)? == qn.scale(&BigInt::from(2)), "true twin q_N doubles");
    }

    let f_nonisolated: Vec<usize> = (0..f.order()).filter(|&v| f.degree_idx(v) > 0).collect();
    if let (Some(&a), Some(&b)) = (
        non_isolated.get(rng.gen_range(0..non_isolated.len().max(1))),
        f_nonisolated.get(rng.gen_range(0..f_nonisolated.len().max(1))),
    ) {
        let gf = gamma(&g)? * gamma(&f)?;
        let one = g.one_point_join(g.id(a), &f, f.id(b))?;
        fail(BigInt::from(2) * gamma(&one)? == gf, "one-point join γ");
        let two = g.two_point_join(g.id(a), &f, f.id(b))?;
        fail(BigInt::from(2) * gamma(&two)? == gf, "two-point join γ");
    }
    Ok(fails)
}

/// Pivot invariance, union multiplicativity, positivity, coefficient
/// identities, pendant/twin recursions and join identities.
pub fn identity_suite(seed: u64, instances: usize, max_order: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("interlace identities");
    let results = (0..instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            identity_case(&mut rng, max_order)
        })
        .collect::<Result<Vec<_>>>()?;
    for fails in results {
        r.merge(1, fails);
    }
    Ok(r)
}

/// Series-parallel fast path against the recursion on random BDH graphs.
pub fn fast_path_suite(seed: u64, count: usize, max_order: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("BDH fast path vs recursion");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_order);
            apply_sequence(&random_bdh_sequence(&mut rng, n))
        })
        .collect::<Result<_>>()?;
    let (c, f) = run_cases(graphs, |g| {
        let fast = qn_bdh_fast(g)?;
        let slow = qn_recursive(g)?;
        Ok((fast != slow).then(|| format!("fast {fast} vs {slow} on [{}]", edges_of(g))))
    })?;
    r.merge(c, f);
    Ok(r)
}

/// `q_N` by state sum for small graphs, used as a third opinion in reports.
pub fn qn_reference(g: &Graph) -> Result<SparsePoly> {
    qn_statesum(g)
}
