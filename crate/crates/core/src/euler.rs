//! 2-in 2-out directed multigraphs, graph states and the circuit partition
//! polynomial, Euler circuits and the chord diagrams they induce.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::chord::ChordDiagram;
use crate::error::{Error, Result};
use crate::interlace::{qn_statesum, X};
use crate::poly::SparsePoly;

/// Largest digraph accepted by state enumeration.
pub const MAX_STATE_VERTICES: usize = 30;

/// Arc-level digraph in which every vertex has in- and out-degree exactly 2.
///
/// Arc ids are positions in the arc list; parallel arcs and loops are allowed,
/// a loop using one in-slot and one out-slot of its vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct EulerDigraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    arcs: Vec<(usize, usize)>,
    ins: Vec<[usize; 2]>,
    outs: Vec<[usize; 2]>,
}

impl EulerDigraph {
    /// Build from vertex ids and `(tail, head)` arcs.
    pub fn new<S: AsRef<str>>(vertices: &[S], arcs: &[(S, S)]) -> Result<Self> {
        let mut index = HashMap::new();
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let lookup = |v: &str| index.get(v).copied().ok_or_else(|| Error::UnknownVertex(v.to_string()));
        let arcs = arcs
            .iter()
            .map(|(t, h)| Ok((lookup(t.as_ref())?, lookup(h.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indexed(vertices, index, arcs)
    }

    /// Build from arcs only, vertices in order of first appearance.
    pub fn from_arcs<S: AsRef<str>>(arcs: &[(S, S)]) -> Result<Self> {
        let mut vertices: Vec<&str> = Vec::new();
        for (t, h) in arcs {
            for v in [t.as_ref(), h.as_ref()] {
                if !vertices.contains(&v) {
                    vertices.push(v);
                }
            }
        }
        let arcs: Vec<(&str, &str)> = arcs.iter().map(|(t, h)| (t.as_ref(), h.as_ref())).collect();
        Self::new(&vertices, &arcs)
    }

    pub(crate) fn from_indexed(
        vertices: Vec<String>,
        index: HashMap<String, usize>,
        arcs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = vertices.len();
        let mut ins: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut outs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, &(t, h)) in arcs.iter().enumerate() {
            outs[t].push(a);
            ins[h].push(a);
        }
        for v in 0..n {
            if ins[v].len() != 2 || outs[v].len() != 2 {
                return Err(Error::NotTwoInTwoOut(format!(
                    "vertex `{}` has in-degree {} and out-degree {}",
                    vertices[v],
                    ins[v].len(),
                    outs[v].len()
                )));
            }
        }
        Ok(EulerDigraph {
            vertices,
            index,
            arcs,
            ins: ins.into_iter().map(|v| [v[0], v[1]]).collect(),
            outs: outs.into_iter().map(|v| [v[0], v[1]]).collect(),
        })
    }

    /// Arc-list format: one `u -> v` per line; repeated lines are parallel arcs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut arcs: Vec<(String, String)> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split("->").map(str::trim).collect();
            match parts.as_slice() {
                [t, h] if !t.is_empty() && !h.is_empty() && !t.contains(' ') && !h.contains(' ') => {
                    arcs.push((t.to_string(), h.to_string()))
                }
                _ => {
                    return Err(Error::Parse {
                        line: n + 1,
                        message: format!("expected `u -> v`, found `{line}`"),
                    })
                }
            }
        }
        Self::from_arcs(&arcs)
    }

    pub fn to_arc_list(&self) -> String {
        self.arcs
            .iter()
            .map(|&(t, h)| format!("{} -> {}\n", self.vertices[t], self.vertices[h]))
            .collect()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc(&self, id: usize) -> (usize, usize) {
        self.arcs[id]
    }

    pub fn arc_ids(&self, id: usize) -> (&str, &str) {
        let (t, h) = self.arcs[id];
        (&self.vertices[t], &self.vertices[h])
    }

    pub fn index_of(&self, v: &str) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Connectivity of the underlying undirected multigraph.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(t, h) in &self.arcs {
            nbrs[t].push(h);
            nbrs[h].push(t);
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &nbrs[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// The out-arc following in-arc `arc` under `ts`.
    fn successor(&self, ts: &TransitionSystem, arc: usize) -> usize {
        let v = self.arcs[arc].1;
        let slot = usize::from(self.ins[v][1] == arc);
        self.outs[v][slot ^ usize::from(ts.crossed[v])]
    }

    fn component_count(&self, ts: &TransitionSystem) -> usize {
        let mut dsu = Dsu::new(self.arcs.len());
        for a in 0..self.arcs.len() {
            dsu.union(a, self.successor(ts, a));
        }
        dsu.sets
    }

    /// Every transition system with its number of cycles, in binary-counter
    /// order over the vertices (vertex 0 is the lowest bit).
    pub fn graph_states(&self) -> Result<GraphStates<'_>> {
        let n = self.vertices.len();
        if n > MAX_STATE_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(GraphStates { g: self, next: 0, end: 1u64 << n })
    }

    /// `f(G;x) = Σ_k f_k x^k`, `f_k` the number of graph states with `k` cycles.
    pub fn circuit_partition_poly(&self) -> Result<SparsePoly> {
        if self.arcs.is_empty() {
            return Ok(SparsePoly::one(&X));
        }
        let mut hist: Vec<u64> = vec![0; self.arcs.len() + 1];
        for (_, k) in self.graph_states()? {
            hist[k] += 1;
        }
        Ok(SparsePoly::from_terms(
            &X,
            hist.into_iter().enumerate().filter(|(_, c)| *c > 0).map(|(k, c)| (vec![k as u32], c)),
        ))
    }

    /// Martin polynomial `m`, from `f(G;x) = x·m(G;x+1)`.
    pub fn martin_poly(&self) -> Result<SparsePoly> {
        let f = self.circuit_partition_poly()?;
        let reduced = f.div_by_var("x")?;
        let x = SparsePoly::var(&X, "x")?;
        reduced.compose(&[&x - &SparsePoly::one(&X)])
    }

    /// One Euler circuit (as arc ids) by Hierholzer's splicing, starting with arc 0.
    pub fn euler_circuit(&self) -> Result<Vec<usize>> {
        if self.arcs.is_empty() {
            return Err(Error::Empty);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut next_out = vec![0usize; self.vertices.len()];
        let mut stack: Vec<usize> = vec![0];
        let mut used = vec![false; self.arcs.len()];
        used[0] = true;
        let mut circuit = Vec::with_capacity(self.arcs.len());
        while let Some(&arc) = stack.last() {
            let v = self.arcs[arc].1;
            let mut advanced = false;
            while next_out[v] < 2 {
                let cand = self.outs[v][next_out[v]];
                next_out[v] += 1;
                if !used[cand] {
                    used[cand] = true;
                    stack.push(cand);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                circuit.push(stack.pop().expect("non-empty"));
            }
        }
        circuit.reverse();
        self.check_circuit(&circuit)?;
        Ok(circuit)
    }

    /// Every Euler circuit, each written starting with arc 0.
    pub fn all_euler_circuits(&self) -> Result<Vec<Vec<usize>>> {
        if self.arcs.is_empty() {
            return Err(Error::Empty);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut out = Vec::new();
        let mut used = vec![false; self.arcs.len()];
        used[0] = true;
        let mut path = vec![0];
        self.extend_circuits(&mut path, &mut used, &mut out);
        Ok(out)
    }

    fn extend_circuits(&self, path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("non-empty");
        if path.len() == self.arcs.len() {
            if self.arcs[last].1 == self.arcs[path[0]].0 {
                out.push(path.clone());
            }
            return;
        }
        let v = self.arcs[last].1;
        for &cand in &self.outs[v] {
            // parallel arcs give the same vertex sequence; keep both, they are distinct circuits
            if !used[cand] {
                used[cand] = true;
                path.push(cand);
                self.extend_circuits(path, used, out);
                path.pop();
                used[cand] = false;
            }
        }
    }

    /// Validate a closed walk using every arc exactly once.
    pub fn check_circuit(&self, circuit: &[usize]) -> Result<()> {
        if circuit.len() != self.arcs.len() {
            return Err(Error::InvalidCircuit(format!(
                "length {} but {} arcs",
                circuit.len(),
                self.arcs.len()
            )));
        }
        let mut seen = vec![false; self.arcs.len()];
        for (i, &a) in circuit.iter().enumerate() {
            if a >= self.arcs.len() || std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidCircuit(format!("arc {a} missing or repeated")));
            }
            let next = circuit[(i + 1) % circuit.len()];
            if next < self.arcs.len() && self.arcs[a].1 != self.arcs[next].0 {
                return Err(Error::InvalidCircuit(format!("arc {a} does not lead into arc {next}")));
            }
        }
        Ok(())
    }

    /// Vertex-visit word of a circuit: the tail of each arc, in order.
    pub fn chord_word_from_circuit(&self, circuit: &[usize]) -> Result<ChordDiagram> {
        self.check_circuit(circuit)?;
        ChordDiagram::new(circuit.iter().map(|&a| self.vertices[self.arcs[a].0].clone()))
    }
}

impl fmt::Debug for EulerDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EulerDigraph {{ {} }}", self.to_arc_list().trim_end().replace('\n', ", "))
    }
}

/// At each vertex, whether in-arc `ins[0]` pairs with `outs[1]` (crossed)
/// rather than `outs[0]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionSystem {
    pub crossed: Vec<bool>,
}

pub struct GraphStates<'a> {
    g: &'a EulerDigraph,
    next: u64,
    end: u64,
}

impl Iterator for GraphStates<'_> {
    type Item = (TransitionSystem, usize);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let code = self.next;
        self.next += 1;
        let ts = TransitionSystem {
            crossed: (0..self.g.vertices.len()).map(|v| code >> v & 1 == 1).collect(),
        };
        let k = self.g.component_count(&ts);
        Some((ts, k))
    }
}

struct Dsu {
    parent: Vec<usize>,
    sets: usize,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), sets: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.sets -= 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAReport {
    /// Circuit partition polynomial of the digraph.
    pub f: SparsePoly,
    /// Distinct `q_N` values of circle graphs over the circuits checked.
    pub circle_qn: Vec<SparsePoly>,
    pub circuits_checked: usize,
    pub exhaustive: bool,
    /// Circuits for which `f(G;x) = x·q_N(H;x+1)` failed.
    pub failures: Vec<Vec<usize>>,
}

impl TheoremAReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.circle_qn.len() == 1
    }
}

/// `x·q_N(H;x+1)` for the circle graph `H` of `word`.
pub fn shifted_circle_qn(word: &ChordDiagram) -> Result<(SparsePoly, SparsePoly)> {
    let qn = qn_statesum(&word.circle_graph())?;
    let x = SparsePoly::var(&X, "x")?;
    let shifted = &x * &qn.compose(&[&x + &SparsePoly::one(&X)])?;
    Ok((qn, shifted))
}

/// Check `f(G;x) = x·q_N(H;x+1)` for every Euler circuit when the digraph has
/// at most `exhaustive_up_to` vertices, otherwise for the Hierholzer circuit.
pub fn verify_theorem_a(g: &EulerDigraph, exhaustive_up_to: usize) -> Result<TheoremAReport> {
    let f = g.circuit_partition_poly()?;
    let exhaustive = g.vertex_count() <= exhaustive_up_to;
    let circuits = if exhaustive { g.all_euler_circuits()? } else { vec![g.euler_circuit()?] };
    let mut circle_qn: Vec<SparsePoly> = Vec::new();
    let mut failures = Vec::new();
    for c in &circuits {
        let (qn, rhs) = shifted_circle_qn(&g.chord_word_from_circuit(c)?)?;
        if rhs != f {
            failures.push(c.clone());
        }
        if !circle_qn.contains(&qn) {
            circle_qn.push(qn);
        }
    }
    Ok(TheoremAReport { f, circle_qn, circuits_checked: circuits.len(), exhaustive, failures })
}

/// Sum of all `f_k`; equals `2^|V|` for a non-empty digraph.
pub fn state_count(f: &SparsePoly) -> BigInt {
    f.terms().map(|(_, c)| c.clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digon_medial() -> EulerDigraph {
        EulerDigraph::from_arcs(&[("u", "w"), ("u", "w"), ("w", "u"), ("w", "u")]).unwrap()
    }

    fn two_loops() -> EulerDigraph {
        EulerDigraph::from_arcs(&[("v", "v"), ("v", "v")]).unwrap()
    }

    #[test]
    fn rejects_wrong_degrees() {
        assert!(matches!(EulerDigraph::from_arcs(&[("a", "b"), ("b", "a")]), Err(Error::NotTwoInTwoOut(_))));
        assert!(matches!(EulerDigraph::parse("a -> b\nb\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn graph_states_examples() {
        let mut counts: Vec<usize> = two_loops().graph_states().unwrap().map(|(_, k)| k).collect();
        counts.sort();
        assert_eq!(counts, vec![1, 2]);

        let states: Vec<_> = digon_medial().graph_states().unwrap().collect();
        assert_eq!(states.len(), 4);
        assert_eq!(states.iter().map(|(_, k)| k).sum::<usize>(), 6);

        let empty = EulerDigraph::from_arcs::<&str>(&[]).unwrap();
        let states: Vec<_> = empty.graph_states().unwrap().collect();
        assert_eq!(states, vec![(TransitionSystem { crossed: vec![] }, 0)]);
    }

    #[test]
    fn circuit_partition_examples() {
        let empty = EulerDigraph::from_arcs::<&str>(&[]).unwrap();
        assert_eq!(empty.circuit_partition_poly().unwrap(), SparsePoly::one(&X));
        let f = digon_medial().circuit_partition_poly().unwrap();
        assert_eq!(f.to_string(), "2*x^2 + 2*x");
        // f = x·m(x+1): m(x) = 2x for the digon medial
        assert_eq!(digon_medial().martin_poly().unwrap().to_string(), "2*x");
        assert!(empty.martin_poly().is_err());
    }

    #[test]
    fn euler_circuit_examples() {
        let g = digon_medial();
        let c = g.euler_circuit().unwrap();
        let word = g.chord_word_from_circuit(&c).unwrap();
        assert_eq!(word.to_string(), "u w u w");
        assert_eq!(word.circle_graph().edge_count(), 1);

        let l = two_loops();
        let c = l.euler_circuit().unwrap();
        assert_eq!(c.len(), 2);
        let word = l.chord_word_from_circuit(&c).unwrap();
        assert_eq!(word.to_string(), "v v");
        assert_eq!(word.circle_graph().order(), 1);
    }

    #[test]
    fn circuit_validation() {
        let g = digon_medial();
        assert!(g.check_circuit(&[0, 2, 1, 3]).is_ok());
        assert!(matches!(g.check_circuit(&[0, 1, 2, 3]), Err(Error::InvalidCircuit(_))));
        assert!(matches!(g.check_circuit(&[0, 2, 0, 3]), Err(Error::InvalidCircuit(_))));
        let disc = EulerDigraph::from_arcs(&[("a", "a"), ("a", "a"), ("b", "b"), ("b", "b")]).unwrap();
        assert_eq!(disc.euler_circuit(), Err(Error::Disconnected));
    }

    #[test]
    fn theorem_a_on_digon_medial() {
        let r = verify_theorem_a(&digon_medial(), 8).unwrap();
        assert!(r.holds());
        assert_eq!(r.circuits_checked, 2);
        assert_eq!(r.circle_qn[0].to_string(), "2*x");
    }

    #[test]
    fn arc_list_round_trip() {
        let g = digon_medial();
        assert_eq!(EulerDigraph::parse(&g.to_arc_list()).unwrap(), g);
    }
}
