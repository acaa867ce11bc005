//! Distance-hereditary graphs: construction sequences, recognition by
//! pendant/twin peeling, the bipartite case and its series-parallel fast path.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bits::BitSet;
use crate::chord::ChordDiagram;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interlace::X;
use crate::planarsp::{tutte_diagonal_sp, SPSequence, SpOp};
use crate::poly::SparsePoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case", tag = "op")]
pub enum DhOp {
    Root { vertex: String },
    Pendant { vertex: String, on: String },
    TrueTwin { vertex: String, of: String },
    FalseTwin { vertex: String, of: String },
}

impl DhOp {
    pub fn vertex(&self) -> &str {
        match self {
            DhOp::Root { vertex }
            | DhOp::Pendant { vertex, .. }
            | DhOp::TrueTwin { vertex, .. }
            | DhOp::FalseTwin { vertex, .. } => vertex,
        }
    }
}

impl fmt::Display for DhOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DhOp::Root { vertex } => write!(f, "root {vertex}"),
            DhOp::Pendant { vertex, on } => write!(f, "pendant {vertex} on {on}"),
            DhOp::TrueTwin { vertex, of } => write!(f, "truetwin {vertex} of {of}"),
            DhOp::FalseTwin { vertex, of } => write!(f, "falsetwin {vertex} of {of}"),
        }
    }
}

/// A root vertex followed by pendant, true-twin and false-twin additions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DHSequence {
    pub ops: Vec<DhOp>,
}

impl DHSequence {
    pub fn new(ops: Vec<DhOp>) -> Self {
        DHSequence { ops }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut ops = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let w: Vec<&str> = line.split_whitespace().collect();
            let s = |i: usize| w[i].to_string();
            let op = match w.as_slice() {
                ["root", _] => DhOp::Root { vertex: s(1) },
                ["pendant", _, "on", _] => DhOp::Pendant { vertex: s(1), on: s(3) },
                ["truetwin", _, "of", _] => DhOp::TrueTwin { vertex: s(1), of: s(3) },
                ["falsetwin", _, "of", _] => DhOp::FalseTwin { vertex: s(1), of: s(3) },
                _ => {
                    return Err(Error::Parse {
                        line: n + 1,
                        message: format!("unrecognised operation `{line}`"),
                    })
                }
            };
            ops.push(op);
        }
        Ok(DHSequence { ops })
    }

    pub fn true_twin_count(&self) -> usize {
        self.ops.iter().filter(|op| matches!(op, DhOp::TrueTwin { .. })).count()
    }

    pub fn vertex_count(&self) -> usize {
        self.ops.len()
    }
}

impl fmt::Display for DHSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            writeln!(f, "{op}")?;
        }
        Ok(())
    }
}

/// Replay a construction sequence.
pub fn apply_sequence(seq: &DHSequence) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, op) in seq.ops.iter().enumerate() {
        let at = |msg: &str| Error::InvalidSequence(format!("op {}: {msg}", i + 1));
        if matches!(op, DhOp::Root { .. }) != (i == 0) {
            return Err(at("exactly the first operation must be `root`"));
        }
        let anchor = match op {
            DhOp::Root { .. } => None,
            DhOp::Pendant { on: a, .. } | DhOp::TrueTwin { of: a, .. } | DhOp::FalseTwin { of: a, .. } => {
                Some(g.index_of(a).ok_or_else(|| Error::UnknownVertex(a.clone()))?)
            }
        };
        if let (Some(a), DhOp::TrueTwin { .. } | DhOp::FalseTwin { .. }) = (anchor, op) {
            if g.degree_idx(a) == 0 {
                return Err(at("twins may only be added to non-isolated vertices"));
            }
        }
        let nbrs: Vec<usize> = match (anchor, op) {
            (Some(a), DhOp::Pendant { .. }) => vec![a],
            (Some(a), DhOp::TrueTwin { .. }) => g.neighbors_idx(a).iter().chain([a]).collect(),
            (Some(a), DhOp::FalseTwin { .. }) => g.neighbors_idx(a).iter().collect(),
            _ => vec![],
        };
        let v = g.add_vertex(op.vertex())?;
        for w in nbrs {
            g.set_edge_idx(v, w, true);
        }
    }
    Ok(g)
}

/// A chord diagram whose circle graph is the graph the sequence builds.
///
/// A pendant is a short chord straddling one end of its anchor; a true twin
/// runs beside the anchor crossing it, a false twin beside it without crossing.
pub fn chord_realization(seq: &DHSequence) -> Result<ChordDiagram> {
    apply_sequence(seq)?;
    let mut word: Vec<String> = Vec::new();
    for op in &seq.ops {
        let (v, a) = match op {
            DhOp::Root { vertex } => {
                word = vec![vertex.clone(), vertex.clone()];
                continue;
            }
            DhOp::Pendant { vertex, on: a } | DhOp::TrueTwin { vertex, of: a } | DhOp::FalseTwin { vertex, of: a } => {
                (vertex.clone(), a)
            }
        };
        let i = word.iter().position(|x| x == a).expect("anchor placed");
        let j = i + 1 + word[i + 1..].iter().position(|x| x == a).expect("anchor placed twice");
        match op {
            DhOp::Pendant { .. } => {
                word.insert(i + 1, v.clone());
                word.insert(i, v);
            }
            DhOp::TrueTwin { .. } => {
                word.insert(j + 1, v.clone());
                word.insert(i + 1, v);
            }
            _ => {
                word.insert(j, v.clone());
                word.insert(i + 1, v);
            }
        }
    }
    ChordDiagram::new(word)
}

/// Outcome of pendant/twin peeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Recognition {
    Accepted(DHSequence),
    /// The subgraph left when no pendant vertex or twin remains.
    Rejected { residual: Vec<String> },
}

impl Recognition {
    pub fn sequence(&self) -> Option<&DHSequence> {
        match self {
            Recognition::Accepted(s) => Some(s),
            Recognition::Rejected { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Pendant,
    FalseTwin,
    TrueTwin,
}

/// Peeling state: rows restricted to the vertices still present.
struct Peeler<'a> {
    g: &'a Graph,
    adj: Vec<BitSet>,
    alive: Vec<bool>,
    left: usize,
}

impl<'a> Peeler<'a> {
    fn new(g: &'a Graph) -> Self {
        Peeler { g, adj: g.rows().to_vec(), alive: vec![true; g.order()], left: g.order() }
    }

    /// Every available move `(kind, removed, anchor)`, in priority order
    /// pendant, false twin, true twin, each by increasing removed index.
    fn moves(&self, all: bool) -> Vec<(Kind, usize, usize)> {
        let mut out = Vec::new();
        let alive = || (0..self.alive.len()).filter(|&v| self.alive[v]);
        for v in alive() {
            if self.adj[v].len() == 1 {
                out.push((Kind::Pendant, v, self.adj[v].first().expect("degree 1")));
                if !all {
                    return out;
                }
            }
        }
        for kind in [Kind::FalseTwin, Kind::TrueTwin] {
            let mut groups: HashMap<BitSet, Vec<usize>> = HashMap::new();
            for v in alive() {
                let mut key = self.adj[v].clone();
                if kind == Kind::TrueTwin {
                    key.insert(v);
                }
                // the anchor must keep a neighbour once the twin is gone
                let min_degree = if kind == Kind::TrueTwin { 2 } else { 1 };
                if self.adj[v].len() >= min_degree {
                    groups.entry(normalise(key)).or_default().push(v);
                }
            }
            let mut found: Vec<(Kind, usize, usize)> = Vec::new();
            for members in groups.values().filter(|m| m.len() > 1) {
                for &v in members {
                    let anchor = *members.iter().find(|&&u| u != v).expect("two members");
                    found.push((kind, v, anchor));
                }
            }
            found.sort_by_key(|&(_, v, _)| v);
            if !all {
                if let Some(&m) = found.first() {
                    return vec![m];
                }
            }
            out.extend(found);
        }
        out
    }

    fn remove(&mut self, v: usize) {
        for w in self.adj[v].iter().collect::<Vec<_>>() {
            self.adj[w].remove(v);
        }
        self.adj[v].clear();
        self.alive[v] = false;
        self.left -= 1;
    }

    fn op(&self, (kind, v, a): (Kind, usize, usize)) -> DhOp {
        let (vertex, anchor) = (self.g.id(v).to_string(), self.g.id(a).to_string());
        match kind {
            Kind::Pendant => DhOp::Pendant { vertex, on: anchor },
            Kind::FalseTwin => DhOp::FalseTwin { vertex, of: anchor },
            Kind::TrueTwin => DhOp::TrueTwin { vertex, of: anchor },
        }
    }

    fn run(mut self, mut choose: impl FnMut(&Self) -> Option<(Kind, usize, usize)>) -> Recognition {
        let mut peeled = Vec::new();
        while self.left > 1 {
            match choose(&self) {
                Some(m) => {
                    peeled.push(self.op(m));
                    self.remove(m.1);
                }
                None => {
                    let residual = (0..self.g.order()).filter(|&v| self.alive[v]).map(|v| self.g.id(v).to_string());
                    return Recognition::Rejected { residual: residual.collect() };
                }
            }
        }
        let Some(root) = self.alive.iter().position(|&a| a) else {
            return Recognition::Rejected { residual: vec![] };
        };
        peeled.push(DhOp::Root { vertex: self.g.id(root).to_string() });
        peeled.reverse();
        Recognition::Accepted(DHSequence { ops: peeled })
    }
}

fn normalise(mut b: BitSet) -> BitSet {
    let words = b.words();
    let keep = words.iter().rposition(|&w| w != 0).map_or(0, |i| i + 1);
    if keep < words.len() {
        b = BitSet::from_indices(0, b.iter());
    }
    b
}

/// Greedy peeling: pendants, then false twins, then true twins, lowest index
/// first. Rejection returns the stuck residual vertex set.
pub fn recognize_dh(g: &Graph) -> Result<Recognition> {
    g.require_simple()?;
    Ok(Peeler::new(g).run(|p| p.moves(false).first().copied()))
}

/// Peeling with a uniformly random available move at every step.
pub fn recognize_dh_random(g: &Graph, rng: &mut impl Rng) -> Result<Recognition> {
    g.require_simple()?;
    Ok(Peeler::new(g).run(|p| p.moves(true).choose(rng).copied()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "criterion")]
pub enum BdhVerdict {
    /// Peels to a single vertex with no true twins.
    Bdh { sequence: DHSequence },
    NotDistanceHereditary { residual: Vec<String> },
    HasTrueTwins { count: usize },
}

impl BdhVerdict {
    pub fn is_bdh(&self) -> bool {
        matches!(self, BdhVerdict::Bdh { .. })
    }

    pub fn describe(&self) -> String {
        match self {
            BdhVerdict::Bdh { .. } => "bipartite distance-hereditary".into(),
            BdhVerdict::NotDistanceHereditary { residual } => {
                format!("not distance-hereditary; stuck on {{{}}}", residual.join(", "))
            }
            BdhVerdict::HasTrueTwins { count } => format!("distance-hereditary but needs {count} true twin(s)"),
        }
    }
}

pub fn bdh_verdict(g: &Graph) -> Result<BdhVerdict> {
    Ok(match recognize_dh(g)? {
        Recognition::Rejected { residual } => BdhVerdict::NotDistanceHereditary { residual },
        Recognition::Accepted(seq) => match seq.true_twin_count() {
            0 => BdhVerdict::Bdh { sequence: seq },
            count => BdhVerdict::HasTrueTwins { count },
        },
    })
}

pub fn is_bdh(g: &Graph) -> Result<bool> {
    Ok(bdh_verdict(g)?.is_bdh())
}

/// Direct test: bipartite, and every cycle of length at least 6 has two or
/// more chords. Exponential; meant for small cross-checks.
pub fn is_bipartite_62_chordal(g: &Graph) -> Result<bool> {
    g.require_simple()?;
    if g.order() > 12 {
        return Err(Error::TooLarge(g.order()));
    }
    if !g.is_bipartite() {
        return Ok(false);
    }
    let n = g.order();
    let mut ok = true;
    for s in 0..n {
        let mut path = vec![s];
        let mut on = BitSet::new(n);
        on.insert(s);
        cycles_from(g, s, &mut path, &mut on, &mut |cycle| {
            if cycle.len() >= 6 {
                let edges: usize = cycle
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| cycle[i + 1..].iter().filter(|&&b| g.adjacent_idx(a, b)).count())
                    .sum();
                if edges - cycle.len() < 2 {
                    ok = false;
                }
            }
        });
        if !ok {
            break;
        }
    }
    Ok(ok)
}

/// Simple cycles whose least vertex is `s`, each reported in both directions.
fn cycles_from(g: &Graph, s: usize, path: &mut Vec<usize>, on: &mut BitSet, visit: &mut impl FnMut(&[usize])) {
    let last = *path.last().expect("non-empty");
    for w in g.neighbors_idx(last).iter() {
        if w == s && path.len() >= 3 {
            visit(path);
        } else if w > s && !on.contains(w) {
            path.push(w);
            on.insert(w);
            cycles_from(g, s, path, on, visit);
            on.remove(w);
            path.pop();
        }
    }
}

/// `γ = 2^(t+1)` for `t` true-twin additions.
pub fn gamma_fast(seq: &DHSequence) -> Result<BigInt> {
    if seq.ops.len() < 2 {
        return Err(Error::Precondition("γ formula needs at least two vertices; γ(K_1) = 1".into()));
    }
    Ok(BigInt::from(1) << (seq.true_twin_count() + 1))
}

/// Series-parallel construction and the vertex ↦ edge correspondence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpTranslation {
    pub sequence: SPSequence,
    pub edge_of: Vec<(String, String)>,
}

/// Whether removing a vertex of `H` matches deleting or contracting its edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Minor {
    Delete,
    Contract,
}

/// Translate a BDH sequence into a series-parallel construction.
///
/// The root takes `e1` (contract type) and the first pendant `e2` (delete
/// type). A pendant on a delete-type edge subdivides it and a false twin of a
/// contract-type edge does too, the new edge being contract type; otherwise
/// the new edge is added in parallel and is delete type.
pub fn bdh_to_sp(seq: &DHSequence) -> Result<SpTranslation> {
    if seq.ops.len() < 2 {
        return Err(Error::Precondition("needs at least two vertices".into()));
    }
    let mut edge: HashMap<&str, (String, Minor)> = HashMap::new();
    let mut ops = Vec::new();
    for (i, op) in seq.ops.iter().enumerate() {
        match (i, op) {
            (0, DhOp::Root { vertex }) => {
                edge.insert(vertex, ("e1".into(), Minor::Contract));
            }
            (1, DhOp::Pendant { vertex, .. }) => {
                ops.push(SpOp::Digon);
                edge.insert(vertex, ("e2".into(), Minor::Delete));
            }
            (_, DhOp::TrueTwin { vertex, .. }) => {
                return Err(Error::NotBdh(format!("true twin `{vertex}` in sequence")));
            }
            (i, DhOp::Pendant { vertex, on: a } | DhOp::FalseTwin { vertex, of: a }) if i > 1 => {
                let (e, minor) = edge.get(a.as_str()).ok_or_else(|| Error::UnknownVertex(a.clone()))?.clone();
                let pendant = matches!(op, DhOp::Pendant { .. });
                let series = pendant == (minor == Minor::Delete);
                ops.push(if series { SpOp::Series(e) } else { SpOp::Parallel(e) });
                let created = SPSequence::created_edge(ops.len() - 1);
                edge.insert(vertex, (created, if series { Minor::Contract } else { Minor::Delete }));
            }
            _ => return Err(Error::InvalidSequence(format!("op {}: `{op}` not allowed here", i + 1))),
        }
    }
    Ok(SpTranslation {
        sequence: SPSequence::new(ops),
        edge_of: seq.ops.iter().map(|op| (op.vertex().to_string(), edge[op.vertex()].0.clone())).collect(),
    })
}

/// `q_N` of a bipartite distance-hereditary graph through its series-parallel
/// counterpart; polynomial in the order.
pub fn qn_bdh_fast(g: &Graph) -> Result<SparsePoly> {
    if !g.is_connected() || g.is_empty() {
        return Err(Error::NotBdh("graph must be connected and non-empty".into()));
    }
    let verdict = bdh_verdict(g)?;
    let BdhVerdict::Bdh { sequence } = verdict else {
        return Err(Error::NotBdh(verdict.describe()));
    };
    if g.order() == 1 {
        return SparsePoly::var(&X, "x");
    }
    tutte_diagonal_sp(&bdh_to_sp(&sequence)?.sequence)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    /// A pendant `w` on `u` becomes a false twin of `v` in the pivot on `uv`.
    pub pivot_duality: bool,
    /// Removing a pendant or false twin of a BDH graph leaves a BDH graph.
    pub bdh_closure: bool,
    /// True-twin counts seen over random peel orders.
    pub true_twin_counts: Vec<usize>,
    /// One-point join of the graph with itself is BDH when the graph is.
    pub join_bdh: bool,
}

impl StructuralReport {
    pub fn holds(&self) -> bool {
        self.pivot_duality && self.bdh_closure && self.join_bdh && self.true_twin_counts.windows(2).all(|w| w[0] == w[1])
    }
}

/// Structural identities for a distance-hereditary graph `g` built by `seq`.
pub fn structural_checks(g: &Graph, seq: &DHSequence, seed: u64, peel_orders: usize) -> Result<StructuralReport> {
    if apply_sequence(seq)? != *g {
        return Err(Error::Precondition("sequence does not build the graph".into()));
    }
    let bdh = is_bdh(g)?;

    let mut pivot_duality = true;
    for w in 0..g.order() {
        if g.degree_idx(w) != 1 {
            continue;
        }
        let u = g.neighbors_idx(w).first().expect("degree 1");
        for v in g.neighbors_idx(u).iter().filter(|&v| v != w) {
            let p = g.pivot(g.id(u), g.id(v))?;
            pivot_duality &= p.neighbors_idx(w).same_elements(p.neighbors_idx(v));
        }
    }

    let mut bdh_closure = true;
    if bdh {
        let open: Vec<&BitSet> = g.rows().iter().collect();
        for v in 0..g.order() {
            let removable = g.degree_idx(v) == 1
                || (0..g.order()).any(|u| u != v && g.degree_idx(v) > 0 && open[u].same_elements(open[v]));
            if removable && g.order() > 1 {
                bdh_closure &= is_bdh(&g.remove_idx(v))?;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut true_twin_counts = vec![seq.true_twin_count()];
    for _ in 0..peel_orders {
        match recognize_dh_random(g, &mut rng)? {
            Recognition::Accepted(s) => true_twin_counts.push(s.true_twin_count()),
            Recognition::Rejected { .. } => return Err(Error::Internal("random peel rejected a DH graph".into())),
        }
    }

    let join_bdh = if bdh && g.order() > 0 {
        let u = g.id(0);
        is_bdh(&g.one_point_join(u, g, g.id(g.order() - 1))?)?
    } else {
        true
    };

    Ok(StructuralReport { pivot_duality, bdh_closure, true_twin_counts, join_bdh })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interlace::{gamma, qn_recursive};

    fn seq(text: &str) -> DHSequence {
        DHSequence::parse(text).unwrap()
    }

    #[test]
    fn apply_examples() {
        let k2 = apply_sequence(&seq("root a\npendant b on a")).unwrap();
        assert_eq!(k2, Graph::from_edges(&[("a", "b")]));
        let k3 = apply_sequence(&seq("root a\npendant b on a\ntruetwin c of b")).unwrap();
        assert_eq!(k3, Graph::from_edges(&[("a", "b"), ("a", "c"), ("b", "c")]));
        let p3 = apply_sequence(&seq("root a\npendant b on a\nfalsetwin c of b")).unwrap();
        assert_eq!(p3, Graph::from_edges(&[("a", "b"), ("a", "c")]));
        assert!(matches!(apply_sequence(&seq("root a\ntruetwin b of a")), Err(Error::InvalidSequence(_))));
        assert_eq!(apply_sequence(&seq("root a\npendant b on z")), Err(Error::UnknownVertex("z".into())));
        assert!(matches!(DHSequence::parse("root a\nleaf b"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn recognition_examples() {
        let c6 = Graph::cycle(6);
        match recognize_dh(&c6).unwrap() {
            Recognition::Rejected { residual } => assert_eq!(residual.len(), 6),
            other => panic!("{other:?}"),
        }
        let s = recognize_dh(&Graph::complete(3)).unwrap().sequence().unwrap().clone();
        assert_eq!(s.true_twin_count(), 1);
        assert_eq!(apply_sequence(&s).unwrap(), Graph::complete(3));
        let s = recognize_dh(&Graph::path(5)).unwrap().sequence().unwrap().clone();
        assert!(s.ops[1..].iter().all(|op| matches!(op, DhOp::Pendant { .. })));
        assert_eq!(apply_sequence(&s).unwrap(), Graph::path(5));
    }

    #[test]
    fn bdh_examples() {
        for g in [Graph::path(4), Graph::star(4), Graph::cycle(4)] {
            assert!(is_bdh(&g).unwrap());
            assert!(is_bipartite_62_chordal(&g).unwrap());
        }
        let mut c6 = Graph::cycle(6);
        c6.add_edge("0", "3").unwrap();
        assert!(!is_bdh(&c6).unwrap());
        assert!(!is_bipartite_62_chordal(&c6).unwrap());
        assert_eq!(bdh_verdict(&Graph::complete(3)).unwrap(), BdhVerdict::HasTrueTwins { count: 1 });
    }

    #[test]
    fn gamma_fast_examples() {
        assert_eq!(gamma_fast(&seq("root a\npendant b on a")).unwrap(), BigInt::from(2));
        let k3 = seq("root a\npendant b on a\ntruetwin c of b");
        assert_eq!(gamma_fast(&k3).unwrap(), gamma(&apply_sequence(&k3).unwrap()).unwrap());
        assert!(gamma_fast(&seq("root a")).is_err());
    }

    #[test]
    fn sp_translation_examples() {
        let t = bdh_to_sp(&seq("root a\npendant b on a")).unwrap();
        assert_eq!(t.sequence.to_string(), "digon\n");
        let t = bdh_to_sp(&seq("root a\npendant b on a\npendant c on a")).unwrap();
        assert_eq!(t.sequence.to_string(), "digon\nparallel e1\n");
        assert_eq!(tutte_diagonal_sp(&t.sequence).unwrap().to_string(), "x^2 + 2*x");
        let t = bdh_to_sp(&seq("root a\npendant b on a\nfalsetwin c of b")).unwrap();
        assert_eq!(t.sequence.to_string(), "digon\nparallel e2\n");
        let t = bdh_to_sp(&seq("root a\npendant b on a\npendant c on b")).unwrap();
        assert_eq!(t.sequence.to_string(), "digon\nseries e2\n");
        assert_eq!(tutte_diagonal_sp(&t.sequence).unwrap().to_string(), "x^2 + 2*x");
        assert!(matches!(bdh_to_sp(&seq("root a\npendant b on a\ntruetwin c of b")), Err(Error::NotBdh(_))));
    }

    #[test]
    fn fast_path_matches_recursion() {
        for g in [Graph::path(3), Graph::path(6), Graph::path(9), Graph::star(5), Graph::cycle(4), Graph::complete(2)] {
            assert_eq!(qn_bdh_fast(&g).unwrap(), qn_recursive(&g).unwrap(), "{g:?}");
        }
        assert_eq!(qn_bdh_fast(&Graph::path(3)).unwrap().to_string(), "x^2 + 2*x");
        assert_eq!(qn_bdh_fast(&Graph::edgeless(1)).unwrap().to_string(), "x");
        assert!(matches!(qn_bdh_fast(&Graph::cycle(6)), Err(Error::NotBdh(_))));
    }

    #[test]
    fn chord_realization_examples() {
        for text in [
            "root a",
            "root a\npendant b on a\ntruetwin c of b",
            "root a\npendant b on a\nfalsetwin c of b\npendant d on c\ntruetwin e of a\nfalsetwin f of d",
        ] {
            let s = seq(text);
            assert_eq!(chord_realization(&s).unwrap().circle_graph(), apply_sequence(&s).unwrap(), "{text}");
        }
    }

    #[test]
    fn structural_examples() {
        let p = Graph::path(5);
        let s = recognize_dh(&p).unwrap().sequence().unwrap().clone();
        let r = structural_checks(&p, &s, 7, 20).unwrap();
        assert!(r.holds(), "{r:?}");
        let j = Graph::path(3).one_point_join("2", &Graph::path(3), "0").unwrap();
        assert!(is_bdh(&j).unwrap());
    }
}
