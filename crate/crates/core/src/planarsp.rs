//! Plane multigraphs given by rotation systems, series-parallel construction,
//! oriented medial digraphs, Tutte polynomials and the β invariant.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::EulerDigraph;
use crate::interlace::{qn_statesum, X, XY};
use crate::poly::SparsePoly;

/// One end of an edge: `end` 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Dart {
    pub edge: usize,
    pub end: u8,
}

impl Dart {
    fn opposite(self) -> Dart {
        Dart { edge: self.edge, end: 1 - self.end }
    }
}

/// Multigraph with a cyclic order of edge-ends around every vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneMultigraph {
    vertices: Vec<String>,
    edges: Vec<String>,
    ends: Vec<[usize; 2]>,
    rotation: Vec<Vec<Dart>>,
}

impl PlaneMultigraph {
    /// Build from vertex ids, edge ids and per-vertex rotations of `(edge, end)`.
    ///
    /// Every edge-end must appear exactly once; the endpoints are read off the
    /// rotation. The embedding must be plane (Euler's formula per component).
    pub fn from_rotation(vertices: Vec<String>, edges: Vec<String>, rotation: Vec<Vec<Dart>>) -> Result<Self> {
        if rotation.len() != vertices.len() {
            return Err(Error::InvalidRotation("one rotation per vertex required".into()));
        }
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut ends = vec![[usize::MAX; 2]; edges.len()];
        for (v, rot) in rotation.iter().enumerate() {
            for d in rot {
                if d.edge >= edges.len() || d.end > 1 {
                    return Err(Error::InvalidRotation(format!("bad edge-end at `{}`", vertices[v])));
                }
                let slot = &mut ends[d.edge][d.end as usize];
                if *slot != usize::MAX {
                    return Err(Error::InvalidRotation(format!("edge `{}` end {} repeated", edges[d.edge], d.end)));
                }
                *slot = v;
            }
        }
        if let Some(e) = ends.iter().position(|e| e.contains(&usize::MAX)) {
            return Err(Error::InvalidRotation(format!("edge `{}` is missing an end", edges[e])));
        }
        let g = PlaneMultigraph { vertices, edges, ends, rotation };
        let genus_ok = g.components().iter().zip(g.faces_per_component()).all(|(c, f)| {
            let e = g.ends.iter().filter(|e| c.contains(&e[0])).count();
            c.len() as i64 - e as i64 + f as i64 == 2
        });
        if !genus_ok {
            return Err(Error::InvalidRotation("rotation system is not plane".into()));
        }
        Ok(g)
    }

    /// Rotation format: `v: e1 e2 ...` per vertex; every edge id occurs twice,
    /// the first occurrence being end 0.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges: Vec<String> = Vec::new();
        let mut edge_index: HashMap<String, usize> = HashMap::new();
        let mut uses: Vec<u8> = Vec::new();
        let mut rotation = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((v, rest)) = line.split_once(':') else {
                return Err(Error::Parse { line: n + 1, message: format!("expected `v: e1 e2 ...`, found `{line}`") });
            };
            let v = v.trim();
            if v.is_empty() || v.contains(char::is_whitespace) {
                return Err(Error::Parse { line: n + 1, message: format!("bad vertex id `{v}`") });
            }
            let mut rot = Vec::new();
            for e in rest.split_whitespace() {
                let id = *edge_index.entry(e.to_string()).or_insert_with(|| {
                    edges.push(e.to_string());
                    uses.push(0);
                    edges.len() - 1
                });
                if uses[id] == 2 {
                    return Err(Error::Parse { line: n + 1, message: format!("edge `{e}` used more than twice") });
                }
                rot.push(Dart { edge: id, end: uses[id] });
                uses[id] += 1;
            }
            vertices.push(v.to_string());
            rotation.push(rot);
        }
        if let Some(e) = uses.iter().position(|&u| u != 2) {
            return Err(Error::InvalidRotation(format!("edge `{}` appears only once", edges[e])));
        }
        Self::from_rotation(vertices, edges, rotation)
    }

    pub fn to_rotation_text(&self) -> String {
        let mut out = String::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            out.push_str(&self.vertices[v]);
            out.push(':');
            for d in rot {
                out.push(' ');
                out.push_str(&self.edges[d.edge]);
            }
            out.push('\n');
        }
        out
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.ends[e][0], self.ends[e][1])
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e == id)
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.ends.iter().map(|e| (e[0], e[1])).collect()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut nbrs = vec![Vec::new(); n];
        for e in &self.ends {
            nbrs[e[0]].push(e[1]);
            nbrs[e[1]].push(e[0]);
        }
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = out.len();
            let mut members = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &nbrs[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = out.len();
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn position(&self) -> HashMap<Dart, (usize, usize)> {
        let mut pos = HashMap::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                pos.insert(d, (v, i));
            }
        }
        pos
    }

    /// Faces as dart cycles: leave along a dart, continue with the rotation
    /// successor of the opposite end.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let pos = self.position();
        let mut done: HashMap<Dart, bool> = HashMap::new();
        let mut faces = Vec::new();
        for rot in &self.rotation {
            for &start in rot {
                if done.contains_key(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = start;
                while done.insert(d, true).is_none() {
                    face.push(d);
                    let (w, i) = pos[&d.opposite()];
                    let r = &self.rotation[w];
                    d = r[(i + 1) % r.len()];
                }
                faces.push(face);
            }
        }
        faces
    }

    fn faces_per_component(&self) -> Vec<usize> {
        let comps = self.components();
        let mut comp_of = vec![0; self.vertices.len()];
        for (c, members) in comps.iter().enumerate() {
            for &v in members {
                comp_of[v] = c;
            }
        }
        let mut count = vec![0; comps.len()];
        for f in self.faces() {
            count[comp_of[self.ends[f[0].edge][f[0].end as usize]]] += 1;
        }
        // an isolated vertex bounds one face
        for (c, members) in comps.iter().enumerate() {
            if members.len() == 1 && self.rotation[members[0]].is_empty() {
                count[c] = 1;
            }
        }
        count
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Oriented medial digraph: a vertex per edge, and an arc `e → e'` for every
    /// consecutive pair in a rotation.
    pub fn medial_digraph(&self) -> Result<EulerDigraph> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let has_loop = self.ends.iter().any(|e| e[0] == e[1]);
        if self.edges.len() < 2 && !has_loop {
            return Err(Error::Precondition("medial digraph needs at least two edges or a loop".into()));
        }
        let mut arcs = Vec::with_capacity(2 * self.edges.len());
        for rot in &self.rotation {
            for (i, d) in rot.iter().enumerate() {
                arcs.push((d.edge, rot[(i + 1) % rot.len()].edge));
            }
        }
        let index = self.edges.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        EulerDigraph::from_indexed(self.edges.clone(), index, arcs)
    }

    pub fn tutte(&self) -> SparsePoly {
        tutte(self.vertex_count(), &self.edge_list())
    }

    pub fn beta(&self) -> Result<BigInt> {
        beta(self.vertex_count(), &self.edge_list())
    }
}

impl fmt::Debug for PlaneMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneMultigraph {{ {} }}", self.to_rotation_text().trim_end().replace('\n', "; "))
    }
}

/// One step of a series-parallel construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "op", content = "edge")]
pub enum SpOp {
    Digon,
    Series(String),
    Parallel(String),
}

/// A digon followed by series subdivisions and parallel additions.
///
/// The digon creates edges `e1`, `e2` on vertices `v1`, `v2`; every later op
/// creates the next edge `e3`, `e4`, ... and a series op the next vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SPSequence {
    pub ops: Vec<SpOp>,
}

impl SPSequence {
    pub fn new(ops: Vec<SpOp>) -> Self {
        SPSequence { ops }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut ops = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let op = match words.as_slice() {
                ["digon"] => SpOp::Digon,
                ["series", e] => SpOp::Series(e.to_string()),
                ["parallel", e] => SpOp::Parallel(e.to_string()),
                _ => {
                    return Err(Error::Parse {
                        line: n + 1,
                        message: format!("expected `digon`, `series <edge>` or `parallel <edge>`, found `{line}`"),
                    })
                }
            };
            ops.push(op);
        }
        Ok(SPSequence { ops })
    }

    /// Name of the edge created by op `i` (the second digon edge for `i = 0`).
    pub fn created_edge(i: usize) -> String {
        format!("e{}", i + 2)
    }

    pub fn edge_count(&self) -> usize {
        self.ops.len() + 1
    }

    /// Every series op replaced by a parallel op on the same edge and vice versa.
    pub fn dual(&self) -> SPSequence {
        SPSequence {
            ops: self
                .ops
                .iter()
                .map(|op| match op {
                    SpOp::Digon => SpOp::Digon,
                    SpOp::Series(e) => SpOp::Parallel(e.clone()),
                    SpOp::Parallel(e) => SpOp::Series(e.clone()),
                })
                .collect(),
        }
    }
}

impl fmt::Display for SPSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            match op {
                SpOp::Digon => writeln!(f, "digon")?,
                SpOp::Series(e) => writeln!(f, "series {e}")?,
                SpOp::Parallel(e) => writeln!(f, "parallel {e}")?,
            }
        }
        Ok(())
    }
}

/// Build the plane multigraph of a construction sequence.
///
/// A series op on `e = (a, b)` keeps `e` on `(a, w)` and adds `(w, b)` in the
/// place of `e` at `b`. A parallel op puts the new edge after `e` at `e`'s end 0
/// and before it at end 1, so the two bound a face.
pub fn build_sp(seq: &SPSequence) -> Result<PlaneMultigraph> {
    match seq.ops.first() {
        Some(SpOp::Digon) => {}
        _ => return Err(Error::InvalidSequence("must start with `digon`".into())),
    }
    let mut vertices = vec!["v1".to_string(), "v2".to_string()];
    let mut edges = vec!["e1".to_string(), "e2".to_string()];
    let mut index: HashMap<String, usize> = HashMap::from([("e1".into(), 0), ("e2".into(), 1)]);
    let mut ends: Vec<[usize; 2]> = vec![[0, 1], [0, 1]];
    let d = |edge, end| Dart { edge, end };
    let mut rotation = vec![vec![d(0, 0), d(1, 0)], vec![d(0, 1), d(1, 1)]];
    for (i, op) in seq.ops.iter().enumerate().skip(1) {
        let name = match op {
            SpOp::Digon => return Err(Error::InvalidSequence(format!("op {}: `digon` only allowed first", i + 1))),
            SpOp::Series(e) | SpOp::Parallel(e) => e,
        };
        let e = *index.get(name).ok_or_else(|| Error::UnknownEdge(name.clone()))?;
        let f = edges.len();
        let fname = SPSequence::created_edge(i);
        edges.push(fname.clone());
        index.insert(fname, f);
        let [a, b] = ends[e];
        match op {
            SpOp::Series(_) => {
                let w = vertices.len();
                vertices.push(format!("v{}", w + 1));
                let slot = rotation[b].iter().position(|&x| x == d(e, 1)).expect("end present");
                rotation[b][slot] = d(f, 1);
                rotation.push(vec![d(e, 1), d(f, 0)]);
                ends[e] = [a, w];
                ends.push([w, b]);
            }
            _ => {
                let pa = rotation[a].iter().position(|&x| x == d(e, 0)).expect("end present");
                rotation[a].insert(pa + 1, d(f, 0));
                let pb = rotation[b].iter().position(|&x| x == d(e, 1)).expect("end present");
                rotation[b].insert(pb, d(f, 1));
                ends.push([a, b]);
            }
        }
    }
    PlaneMultigraph::from_rotation(vertices, edges, rotation)
}

/// Tutte polynomial in `x, y` of a multigraph on `0..n` by deletion–contraction.
pub fn tutte(n: usize, edges: &[(usize, usize)]) -> SparsePoly {
    let _ = n;
    let edges: Vec<(u32, u32)> = edges.iter().map(|&(u, v)| (u as u32, v as u32)).collect();
    let mut memo = HashMap::new();
    tutte_rec(edges, &mut memo)
}

fn monomial(i: u32, j: u32) -> SparsePoly {
    SparsePoly::from_terms(&XY, [(vec![i, j], 1)])
}

fn tutte_rec(mut edges: Vec<(u32, u32)>, memo: &mut HashMap<Vec<(u32, u32)>, SparsePoly>) -> SparsePoly {
    let before = edges.len();
    edges.retain(|&(u, v)| u != v);
    let loops = (before - edges.len()) as u32;
    let bridges = contract_bridges(&mut edges);
    let factor = monomial(bridges, loops);
    if edges.is_empty() {
        return factor;
    }
    let key = canonical(&edges);
    if let Some(t) = memo.get(&key) {
        return &factor * t;
    }
    let edges = key.clone();
    // edge at a minimum-degree vertex
    let mut deg: HashMap<u32, usize> = HashMap::new();
    for &(u, v) in &edges {
        *deg.entry(u).or_default() += 1;
        *deg.entry(v).or_default() += 1;
    }
    let pick = (0..edges.len())
        .min_by_key(|&i| deg[&edges[i].0].min(deg[&edges[i].1]))
        .expect("non-empty");
    let (a, b) = edges[pick];
    let mut deleted = edges.clone();
    deleted.swap_remove(pick);
    let contracted: Vec<(u32, u32)> = deleted
        .iter()
        .map(|&(u, v)| (if u == b { a } else { u }, if v == b { a } else { v }))
        .collect();
    let t = &tutte_rec(deleted, memo) + &tutte_rec(contracted, memo);
    memo.insert(key, t.clone());
    &factor * &t
}

/// Contract every bridge (none of which is a loop), returning how many.
fn contract_bridges(edges: &mut Vec<(u32, u32)>) -> u32 {
    let mut count = 0;
    loop {
        let Some(i) = (0..edges.len()).find(|&i| is_bridge(edges, i)) else { return count };
        let (a, b) = edges.swap_remove(i);
        for e in edges.iter_mut() {
            if e.0 == b {
                e.0 = a;
            }
            if e.1 == b {
                e.1 = a;
            }
        }
        count += 1;
    }
}

fn is_bridge(edges: &[(u32, u32)], skip: usize) -> bool {
    let (s, t) = edges[skip];
    if s == t {
        return false;
    }
    let mut seen = vec![s];
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for (i, &(x, y)) in edges.iter().enumerate() {
            if i == skip {
                continue;
            }
            let w = if x == u {
                y
            } else if y == u {
                x
            } else {
                continue;
            };
            if w == t {
                return false;
            }
            if !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    true
}

/// Vertices relabelled by (degree, label), edges normalised and sorted.
fn canonical(edges: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut deg: HashMap<u32, usize> = HashMap::new();
    for &(u, v) in edges {
        *deg.entry(u).or_default() += 1;
        *deg.entry(v).or_default() += 1;
    }
    let mut order: Vec<u32> = deg.keys().copied().collect();
    order.sort_by_key(|v| (deg[v], *v));
    let relabel: HashMap<u32, u32> = order.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    let mut out: Vec<(u32, u32)> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (relabel[&u], relabel[&v]);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Coefficient of `x` in the Tutte polynomial.
pub fn beta(n: usize, edges: &[(usize, usize)]) -> Result<BigInt> {
    if edges.len() < 2 {
        return Err(Error::Precondition("β needs at least two edges".into()));
    }
    Ok(tutte(n, edges).coefficient(&[1, 0]))
}

/// `t(G; x, x)` from the full Tutte polynomial.
pub fn tutte_diagonal(t: &SparsePoly) -> Result<SparsePoly> {
    let x = SparsePoly::var(&X, "x")?;
    t.compose(&[x.clone(), x])
}

#[derive(Clone, Copy, Debug)]
enum Reduction {
    Parallel { keep: usize, drop: usize },
    Series { keep: usize, drop: usize },
}

/// Series and parallel reductions taking a connected multigraph to one edge.
fn reduction_schedule(n: usize, edges: &[(usize, usize)]) -> Result<(Vec<Reduction>, usize)> {
    let mut ends: Vec<(usize, usize)> = edges.to_vec();
    let mut incid: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pair: HashMap<(usize, usize), usize> = HashMap::new();
    let mut ops = Vec::new();
    let mut alive = 0usize;
    let key = |(a, b): (usize, usize)| (a.min(b), a.max(b));

    fn insert(
        e: usize,
        ends: &[(usize, usize)],
        incid: &mut [Vec<usize>],
        pair: &mut HashMap<(usize, usize), usize>,
        ops: &mut Vec<Reduction>,
        alive: &mut usize,
    ) {
        let (a, b) = ends[e];
        let k = (a.min(b), a.max(b));
        if let Some(&g) = pair.get(&k) {
            ops.push(Reduction::Parallel { keep: g, drop: e });
        } else {
            pair.insert(k, e);
            incid[a].push(e);
            incid[b].push(e);
            *alive += 1;
        }
    }

    for (e, &(a, b)) in edges.iter().enumerate() {
        if a == b {
            return Err(Error::NotSeriesParallel(edges.len()));
        }
        insert(e, &ends, &mut incid, &mut pair, &mut ops, &mut alive);
    }
    let mut vertices_left = n;
    let mut work: Vec<usize> = (0..n).collect();
    while let Some(w) = work.pop() {
        if alive <= 1 || incid[w].len() != 2 {
            continue;
        }
        let (e, f) = (incid[w][0], incid[w][1]);
        let other = |x: usize| if ends[x].0 == w { ends[x].1 } else { ends[x].0 };
        let (a, b) = (other(e), other(f));
        for x in [e, f] {
            pair.remove(&key(ends[x]));
            let (p, q) = ends[x];
            incid[p].retain(|&y| y != x);
            incid[q].retain(|&y| y != x);
        }
        alive -= 2;
        vertices_left -= 1;
        ops.push(Reduction::Series { keep: e, drop: f });
        ends[e] = (a, b);
        insert(e, &ends, &mut incid, &mut pair, &mut ops, &mut alive);
        work.push(a);
        work.push(b);
    }
    if alive != 1 || vertices_left != 2 {
        return Err(Error::NotSeriesParallel(alive));
    }
    let last = *pair.values().next().expect("one edge left");
    Ok((ops, last))
}

/// `t(G; x₀, x₀)` via the multivariate partition function with
/// `q = (x₀-1)²` and every edge weight `x₀-1`.
fn sp_diagonal_at(n: usize, edge_count: usize, ops: &[Reduction], last: usize, x0: i64) -> Result<BigRational> {
    let s = BigRational::from_integer(BigInt::from(x0 - 1));
    let q = &s * &s;
    let one = BigRational::one();
    let mut w = vec![s.clone(); edge_count];
    let mut prefactor = BigRational::one();
    for op in ops {
        match *op {
            Reduction::Parallel { keep, drop } => {
                w[keep] = (&one + &w[keep]) * (&one + &w[drop]) - &one;
            }
            Reduction::Series { keep, drop } => {
                let denom = &q + &w[keep] + &w[drop];
                if denom.is_zero() {
                    return Err(Error::Internal(format!("vanishing series denominator at x = {x0}")));
                }
                w[keep] = &w[keep] * &w[drop] / &denom;
                prefactor *= denom;
            }
        }
    }
    let z = prefactor * (&q * &q + &q * &w[last]);
    Ok(z / num_traits::pow(s, n + 1))
}

/// `t(G; x, x)` of a series-parallel multigraph by reduction at integer points
/// and interpolation; polynomial in the number of edges.
pub fn tutte_diagonal_reduced(n: usize, edges: &[(usize, usize)]) -> Result<SparsePoly> {
    let (ops, last) = reduction_schedule(n, edges)?;
    let points: Vec<i64> = (2..edges.len() as i64 + 4).collect();
    let values = points
        .par_iter()
        .map(|&x0| Ok((BigInt::from(x0), sp_diagonal_at(n, edges.len(), &ops, last, x0)?)))
        .collect::<Result<Vec<_>>>()?;
    SparsePoly::interpolate_univariate("x", &values)
}

pub fn tutte_diagonal_sp(seq: &SPSequence) -> Result<SparsePoly> {
    let g = build_sp(seq)?;
    tutte_diagonal_reduced(g.vertex_count(), &g.edge_list())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremBReport {
    pub circle_word: String,
    pub qn: SparsePoly,
    pub tutte_diagonal: SparsePoly,
    /// Fast diagonal when the input came as a construction sequence.
    pub sp_diagonal: Option<SparsePoly>,
    pub gamma: BigInt,
    pub beta: BigInt,
}

impl TheoremBReport {
    pub fn diagonal_matches(&self) -> bool {
        self.qn == self.tutte_diagonal && self.sp_diagonal.as_ref().is_none_or(|d| *d == self.tutte_diagonal)
    }

    pub fn gamma_matches(&self) -> bool {
        self.gamma == BigInt::from(2) * &self.beta
    }

    pub fn holds(&self) -> bool {
        self.diagonal_matches() && self.gamma_matches()
    }
}

/// Medial digraph, an Euler circuit, its circle graph `H`; compare `q_N(H)`
/// with `t(G;x,x)` and `γ(H)` with `2β(G)`.
pub fn verify_theorem_b(g: &PlaneMultigraph) -> Result<TheoremBReport> {
    if g.edge_count() < 2 {
        return Err(Error::Precondition("needs at least two edges".into()));
    }
    let medial = g.medial_digraph()?;
    let circuit = medial.euler_circuit()?;
    let word = medial.chord_word_from_circuit(&circuit)?;
    let qn = qn_statesum(&word.circle_graph())?;
    let t = g.tutte();
    let gamma = qn.coefficient(&[1]);
    Ok(TheoremBReport {
        circle_word: word.to_string(),
        tutte_diagonal: tutte_diagonal(&t)?,
        sp_diagonal: None,
        beta: t.coefficient(&[1, 0]),
        qn,
        gamma,
    })
}

pub fn verify_theorem_b_sp(seq: &SPSequence) -> Result<TheoremBReport> {
    let mut report = verify_theorem_b(&build_sp(seq)?)?;
    report.sp_diagonal = Some(tutte_diagonal_sp(seq)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str) -> SPSequence {
        SPSequence::parse(text).unwrap()
    }

    const K4: &str = "0: a b c\n1: d a f\n2: e b d\n3: f c e\n";

    #[test]
    fn build_examples() {
        let digon = build_sp(&seq("digon")).unwrap();
        assert_eq!((digon.vertex_count(), digon.edge_count(), digon.face_count()), (2, 2, 2));
        let c3 = build_sp(&seq("digon\nseries e2")).unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count(), c3.face_count()), (3, 3, 2));
        let bond = build_sp(&seq("digon\nparallel e1")).unwrap();
        assert_eq!((bond.vertex_count(), bond.edge_count(), bond.face_count()), (2, 3, 3));
        assert_eq!(build_sp(&seq("digon\nseries e9")), Err(Error::UnknownEdge("e9".into())));
        assert!(matches!(build_sp(&seq("series e1")), Err(Error::InvalidSequence(_))));
    }

    #[test]
    fn rotation_round_trip_and_planarity() {
        let g = build_sp(&seq("digon\nseries e1\nparallel e3\nseries e2")).unwrap();
        let text = g.to_rotation_text();
        assert_eq!(PlaneMultigraph::parse(&text).unwrap().to_rotation_text(), text);
        let k4 = PlaneMultigraph::parse(K4).unwrap();
        assert_eq!(k4.face_count(), 4);
        // swapping two ends at one vertex of K_4 gives a torus embedding
        assert!(matches!(
            PlaneMultigraph::parse("0: a c b\n1: d a f\n2: e b d\n3: f c e\n"),
            Err(Error::InvalidRotation(_))
        ));
        assert!(matches!(PlaneMultigraph::parse("0 a b"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn medial_examples() {
        let m = build_sp(&seq("digon")).unwrap().medial_digraph().unwrap();
        let mut arcs: Vec<_> = (0..m.arc_count()).map(|a| m.arc_ids(a)).collect();
        arcs.sort();
        assert_eq!(arcs, vec![("e1", "e2"), ("e1", "e2"), ("e2", "e1"), ("e2", "e1")]);
        let m = build_sp(&seq("digon\nseries e2")).unwrap().medial_digraph().unwrap();
        assert_eq!((m.vertex_count(), m.arc_count()), (3, 6));
        let bridge = PlaneMultigraph::parse("a: e\nb: e\n").unwrap();
        assert!(matches!(bridge.medial_digraph(), Err(Error::Precondition(_))));
    }

    #[test]
    fn tutte_examples() {
        let t = |s: &str| build_sp(&seq(s)).unwrap().tutte().to_string();
        assert_eq!(t("digon"), "x + y");
        assert_eq!(t("digon\nseries e2"), "x^2 + x + y");
        assert_eq!(t("digon\nparallel e1"), "y^2 + x + y");
        assert_eq!(tutte(0, &[]), SparsePoly::one(&XY));
        let k4 = PlaneMultigraph::parse(K4).unwrap();
        assert_eq!(k4.beta().unwrap(), BigInt::from(2));
        assert_eq!(k4.tutte().eval_at(&[("x", 1), ("y", 1)]).unwrap(), BigInt::from(16));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(build_sp(&seq("digon")).unwrap().beta().unwrap(), BigInt::from(1));
        assert_eq!(build_sp(&seq("digon\nseries e2")).unwrap().beta().unwrap(), BigInt::from(1));
        assert!(beta(2, &[(0, 1)]).is_err());
    }

    #[test]
    fn sp_diagonal_examples() {
        assert_eq!(tutte_diagonal_sp(&seq("digon")).unwrap().to_string(), "2*x");
        assert_eq!(tutte_diagonal_sp(&seq("digon\nseries e2")).unwrap().to_string(), "x^2 + 2*x");
        assert_eq!(tutte_diagonal_sp(&seq("digon\nparallel e1")).unwrap().to_string(), "x^2 + 2*x");
        let k4 = PlaneMultigraph::parse(K4).unwrap();
        assert!(matches!(
            tutte_diagonal_reduced(4, &k4.edge_list()),
            Err(Error::NotSeriesParallel(_))
        ));
    }

    #[test]
    fn theorem_b_examples() {
        for s in ["digon", "digon\nseries e2", "digon\nparallel e1", "digon\nseries e1\nparallel e3\nseries e4"] {
            let r = verify_theorem_b_sp(&seq(s)).unwrap();
            assert!(r.holds(), "{s}: {r:?}");
        }
        let r = verify_theorem_b(&PlaneMultigraph::parse(K4).unwrap()).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.gamma, BigInt::from(4));
    }
}
