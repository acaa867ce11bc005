//! Undirected graphs with optional loops and no parallel edges.
//!
//! Vertices carry opaque string ids and are stored in insertion order; all
//! internal work happens on dense indices and [`BitSet`] adjacency rows. A loop
//! at `v` is the diagonal bit `v ∈ N(v)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::bits::{gf2_rank, BitSet};
use crate::error::{Error, Result};

#[derive(Clone, Default)]
pub struct Graph {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on the given vertex ids.
    pub fn with_vertices<I, S>(ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Graph::new();
        for id in ids {
            g.add_vertex(id)?;
        }
        Ok(g)
    }

    /// Graph from an edge list; vertices are created in order of first
    /// appearance and `(v, v)` is a loop.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Self {
        let mut g = Graph::new();
        for (u, v) in edges {
            let a = g.ensure_vertex(u.as_ref());
            let b = g.ensure_vertex(v.as_ref());
            g.set_edge_idx(a, b, true);
        }
        g
    }

    /// The edgeless graph `E_n` on vertices `0..n`.
    pub fn edgeless(n: usize) -> Self {
        Graph::with_vertices((0..n).map(|i| i.to_string())).expect("distinct ids")
    }

    /// The complete graph `K_n` on vertices `0..n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for i in 0..n {
            for j in i + 1..n {
                g.set_edge_idx(i, j, true);
            }
        }
        g
    }

    /// The path `P_n` on vertices `0..n`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for i in 1..n {
            g.set_edge_idx(i - 1, i, true);
        }
        g
    }

    /// The cycle `C_n` on vertices `0..n`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n > 2 {
            g.set_edge_idx(n - 1, 0, true);
        }
        g
    }

    /// The star `K_{1,m}` with centre `0`.
    pub fn star(m: usize) -> Self {
        let mut g = Graph::edgeless(m + 1);
        for i in 1..=m {
            g.set_edge_idx(0, i, true);
        }
        g
    }

    pub fn add_vertex(&mut self, id: impl Into<String>) -> Result<usize> {
        let id = id.into();
        if self.index.contains_key(&id) {
            return Err(Error::DuplicateVertex(id));
        }
        let i = self.ids.len();
        self.index.insert(id.clone(), i);
        self.ids.push(id);
        self.adj.push(BitSet::new(i + 1));
        Ok(i)
    }

    /// Index of `id`, adding it as a new vertex if absent.
    pub fn ensure_vertex(&mut self, id: &str) -> usize {
        match self.index.get(id) {
            Some(&i) => i,
            None => self.add_vertex(id).expect("absent id"),
        }
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<()> {
        let a = self.idx(u)?;
        let b = self.idx(v)?;
        self.set_edge_idx(a, b, true);
        Ok(())
    }

    pub(crate) fn set_edge_idx(&mut self, a: usize, b: usize, on: bool) {
        self.adj[a].set(b, on);
        self.adj[b].set(a, on);
    }

    fn idx(&self, id: &str) -> Result<usize> {
        self.index_of(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.ids
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn adjacent_idx(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.adj[a].contains(b),
            _ => false,
        }
    }

    pub fn has_loop_idx(&self, a: usize) -> bool {
        self.adj[a].contains(a)
    }

    /// Neighbourhood row of `a`; contains `a` itself iff `a` is looped.
    pub fn neighbors_idx(&self, a: usize) -> &BitSet {
        &self.adj[a]
    }

    pub fn neighbors(&self, id: &str) -> Result<Vec<&str>> {
        let a = self.idx(id)?;
        Ok(self.adj[a].iter().map(|i| self.ids[i].as_str()).collect())
    }

    /// Number of non-loop neighbours.
    pub fn degree_idx(&self, a: usize) -> usize {
        self.adj[a].len() - usize::from(self.has_loop_idx(a))
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.adj
    }

    /// Non-loop edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges_idx(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.order() {
            for j in self.adj[i].iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edges(&self) -> Vec<(&str, &str)> {
        self.edges_idx()
            .into_iter()
            .map(|(i, j)| (self.ids[i].as_str(), self.ids[j].as_str()))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges_idx().len()
    }

    pub fn loops_idx(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.has_loop_idx(i)).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.loops_idx().is_empty()
    }

    pub fn require_simple(&self) -> Result<()> {
        match self.loops_idx().first() {
            Some(&i) => Err(Error::LoopsNotAllowed(self.ids[i].clone())),
            None => Ok(()),
        }
    }

    fn indices_of(&self, s: &[&str]) -> Result<Vec<usize>> {
        s.iter().map(|v| self.idx(v)).collect()
    }

    /// GF(2) rank and nullity of the adjacency matrix of `g[s]`, loops on the diagonal.
    pub fn rank_nullity_gf2(&self, s: &[&str]) -> Result<(usize, usize)> {
        let idx = self.indices_of(s)?;
        let mask = BitSet::from_indices(self.order(), idx.iter().copied());
        let r = self.rank_of_mask(&mask);
        Ok((r, mask.len() - r))
    }

    /// GF(2) rank of the principal submatrix on `mask`.
    pub fn rank_of_mask(&self, mask: &BitSet) -> usize {
        gf2_rank(mask.iter().map(|i| self.adj[i].intersection(mask)))
    }

    pub fn induced(&self, s: &[&str]) -> Result<Graph> {
        let idx = self.indices_of(s)?;
        Ok(self.induced_idx(&idx))
    }

    /// Induced subgraph on the given distinct indices, preserving their order.
    pub fn induced_idx(&self, idx: &[usize]) -> Graph {
        let mut g = Graph::new();
        for &i in idx {
            g.add_vertex(self.ids[i].clone()).expect("distinct indices");
        }
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a) {
                if self.adj[i].contains(j) {
                    g.set_edge_idx(a, b, true);
                }
            }
        }
        g
    }

    pub fn remove_vertex(&self, id: &str) -> Result<Graph> {
        let v = self.idx(id)?;
        Ok(self.remove_idx(v))
    }

    pub fn remove_idx(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.order()).filter(|&i| i != v).collect();
        self.induced_idx(&keep)
    }

    /// Disjoint union; returns the new ids given to `other`'s vertices.
    ///
    /// Ids of `other` colliding with ids of `self` get primes appended.
    pub fn disjoint_union_with_map(&self, other: &Graph) -> (Graph, Vec<String>) {
        let mut g = self.clone();
        let mut map = Vec::with_capacity(other.order());
        for id in &other.ids {
            let mut new_id = id.clone();
            while g.contains(&new_id) || other.index.contains_key(&new_id) && new_id != *id {
                new_id.push('\'');
            }
            g.add_vertex(new_id.clone()).expect("fresh id");
            map.push(new_id);
        }
        let offset = self.order();
        for i in 0..other.order() {
            for j in other.adj[i].iter().filter(|&j| j >= i) {
                g.set_edge_idx(offset + i, offset + j, true);
            }
        }
        (g, map)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.disjoint_union_with_map(other).0
    }

    /// `G^{uv}`: toggle all edges between the classes `A_u`, `A_v` and `A_{uv}`.
    pub fn pivot(&self, u: &str, v: &str) -> Result<Graph> {
        let a = self.idx(u)?;
        let b = self.idx(v)?;
        if a == b || !self.adj[a].contains(b) {
            return Err(Error::NotAnEdge(u.to_string(), v.to_string()));
        }
        let mut g = self.clone();
        pivot_rows(&mut g.adj, a, b);
        Ok(g)
    }

    /// `G^a`: complement the subgraph induced by `N(a)`.
    ///
    /// When `a` is looped, `a ∈ N(a)`, so the complement also toggles the
    /// loops on `N(a)` and the edges at `a` itself, leaving `a` isolated.
    pub fn local_complement(&self, a: &str) -> Result<Graph> {
        let i = self.idx(a)?;
        let mut g = self.clone();
        local_complement_rows(&mut g.adj, i);
        Ok(g)
    }

    /// Identify `u ∈ self` with `v ∈ other`; the merged vertex keeps id `u`.
    pub fn one_point_join(&self, u: &str, other: &Graph, v: &str) -> Result<Graph> {
        let a = self.idx(u)?;
        let b = other.idx(v)?;
        let rest: Vec<usize> = (0..other.order()).filter(|&i| i != b).collect();
        let other_rest = other.induced_idx(&rest);
        let (mut g, map) = self.disjoint_union_with_map(&other_rest);
        for j in other.adj[b].iter() {
            if j == b {
                g.set_edge_idx(a, a, true);
            } else {
                let w = g.idx(&map[rest.iter().position(|&r| r == j).expect("kept")]).expect("mapped");
                g.set_edge_idx(a, w, true);
            }
        }
        Ok(g)
    }

    /// Keep both `u` and `v`; join `u` to `N_other(v)` and `v` to `N_self(u)`,
    /// making `u` and `v` false twins.
    pub fn two_point_join(&self, u: &str, other: &Graph, v: &str) -> Result<Graph> {
        let a = self.idx(u)?;
        let b = other.idx(v)?;
        let (mut g, map) = self.disjoint_union_with_map(other);
        let off = self.order();
        let vb = off + b;
        debug_assert_eq!(g.ids[vb], map[b]);
        for j in other.adj[b].iter().filter(|&j| j != b) {
            g.set_edge_idx(a, off + j, true);
        }
        for j in self.adj[a].iter().filter(|&j| j != a) {
            g.set_edge_idx(vb, j, true);
        }
        Ok(g)
    }

    /// Connected components as lists of indices, in index order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut colour = vec![None; n];
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("coloured");
                for w in self.adj[u].iter() {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// True iff removing `v` increases the number of components of `v`'s component.
    pub fn is_cut_vertex_idx(&self, v: usize) -> bool {
        let before = self.component_count();
        let after = self.remove_idx(v).component_count();
        // an isolated v disappears and lowers the count by one
        let isolated = self.degree_idx(v) == 0;
        after + usize::from(isolated) > before
    }

    /// Parse the edge-list format: `u v` per edge, `u u` for a loop, a lone
    /// `v` declares a vertex. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut g = Graph::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                [v] => {
                    g.ensure_vertex(v);
                }
                [u, v] => {
                    let a = g.ensure_vertex(u);
                    let b = g.ensure_vertex(v);
                    g.set_edge_idx(a, b, true);
                }
                _ => {
                    return Err(Error::Parse {
                        line: n + 1,
                        message: format!("expected `u v` or `v`, found `{line}`"),
                    })
                }
            }
        }
        Ok(g)
    }

    /// Inverse of [`parse_edge_list`](Self::parse_edge_list): isolated
    /// vertices first, then loops and edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for i in 0..self.order() {
            if self.adj[i].is_empty() {
                out.push_str(&self.ids[i]);
                out.push('\n');
            }
        }
        for i in 0..self.order() {
            for j in self.adj[i].iter().filter(|&j| j >= i) {
                out.push_str(&format!("{} {}\n", self.ids[i], self.ids[j]));
            }
        }
        out
    }

    fn edge_set(&self) -> HashSet<(String, String)> {
        let mut s = HashSet::new();
        for i in 0..self.order() {
            for j in self.adj[i].iter() {
                let (a, b) = (&self.ids[i], &self.ids[j]);
                if a <= b {
                    s.insert((a.clone(), b.clone()));
                }
            }
        }
        s
    }
}

/// Labelled equality: same vertex ids and the same edges and loops,
/// regardless of insertion order.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
            && self.ids.iter().all(|id| other.contains(id))
            && self.edge_set() == other.edge_set()
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .chain(self.loops_idx().into_iter().map(|i| format!("{0}-{0}", self.ids[i])))
            .collect();
        write!(f, "Graph {{ vertices: {:?}, edges: [{}] }}", self.ids, edges.join(", "))
    }
}

/// Tripartite toggle of the pivot on rows indexed by vertex. Loops and the
/// edges at `a`, `b` themselves are unchanged.
pub(crate) fn pivot_rows(adj: &mut [BitSet], a: usize, b: usize) {
    let ab = BitSet::from_indices(adj.len(), [a, b]);
    let na = adj[a].difference(&ab);
    let nb = adj[b].difference(&ab);
    let only_a = na.difference(&nb);
    let only_b = nb.difference(&na);
    let both = na.intersection(&nb);
    for i in only_a.iter() {
        adj[i].xor_with(&only_b.union(&both));
    }
    for i in only_b.iter() {
        adj[i].xor_with(&only_a.union(&both));
    }
    for i in both.iter() {
        adj[i].xor_with(&only_a.union(&only_b));
    }
}

pub(crate) fn local_complement_rows(adj: &mut [BitSet], a: usize) {
    let nbhd = adj[a].clone();
    let looped = nbhd.contains(a);
    for i in nbhd.iter() {
        let keep_diag = adj[i].contains(i);
        adj[i].xor_with(&nbhd);
        adj[i].set(i, keep_diag != looped);
    }
}
