//! The two-variable interlace polynomial `q(G;x,y)`, the vertex-nullity
//! polynomial `q_N(G;x)` and the γ invariant.
//!
//! Each polynomial is available two ways: as a subset state sum over GF(2)
//! ranks, and through the pivot / local-complementation recursions. The two
//! routes share nothing but the graph type, so each checks the other.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{gf2_rank_u64, BitSet};
use crate::error::{Error, Result};
use crate::graph::{local_complement_rows, pivot_rows, Graph};
use crate::poly::SparsePoly;

/// Variables of `q`.
pub const XY: [&str; 2] = ["x", "y"];
/// Variable of `q_N` and every other univariate polynomial.
pub const X: [&str; 1] = ["x"];

/// Largest graph accepted by the subset state sums.
pub const MAX_STATESUM_ORDER: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    StateSum,
    Recursion,
    Specialization,
    BdhFast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterlaceResult {
    pub q: Option<SparsePoly>,
    pub qn: Option<SparsePoly>,
    pub gamma: Option<BigInt>,
    pub method: Method,
}

impl InterlaceResult {
    pub fn from_q(q: SparsePoly, method: Method) -> Self {
        InterlaceResult { q: Some(q), qn: None, gamma: None, method }
    }

    /// Wraps `q_N`, deriving γ from its linear coefficient.
    pub fn from_qn(qn: SparsePoly, method: Method) -> Self {
        let gamma = Some(qn.coefficient(&[1]));
        InterlaceResult { q: None, qn: Some(qn), gamma, method }
    }
}

fn shifted_powers(var: &str, vars: &[&str], n: usize) -> Vec<SparsePoly> {
    let base = &SparsePoly::var(vars, var).expect("declared") - &SparsePoly::one(vars);
    let mut out = vec![SparsePoly::one(vars)];
    for k in 1..=n {
        out.push(&out[k - 1] * &base);
    }
    out
}

/// Histogram `h[rank][nullity]` over all vertex subsets.
fn rank_histogram(g: &Graph) -> Result<Vec<Vec<u64>>> {
    let n = g.order();
    if n > MAX_STATESUM_ORDER {
        return Err(Error::TooLarge(n));
    }
    let rows: Vec<u64> = g
        .rows()
        .iter()
        .map(|r| r.iter().fold(0u64, |acc, j| acc | 1 << j))
        .collect();
    let total: u64 = 1 << n;
    let chunk: u64 = 1 << 10.min(n);
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    let width = n + 1;
    let flat = (0..total / chunk)
        .into_par_iter()
        .map(|c| {
            let mut hist = vec![0u64; width * width];
            let mut sub = [0u64; 64];
            for k in c * chunk..(c + 1) * chunk {
                // Gray-code order; each rank is computed from scratch
                let mask = k ^ (k >> 1);
                let mut m = 0;
                let mut bits = mask;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    sub[m] = rows[i] & mask;
                    m += 1;
                }
                let r = gf2_rank_u64(&mut sub[..m]);
                hist[r * width + (m - r)] += 1;
            }
            hist
        })
        .reduce(|| vec![0u64; width * width], merge);
    Ok(flat.chunks(width).map(|c| c.to_vec()).collect())
}

/// `q(G;x,y) = Σ_S (x−1)^{r(G[S])} (y−1)^{n(G[S])}`.
pub fn q_statesum(g: &Graph) -> Result<SparsePoly> {
    let hist = rank_histogram(g)?;
    let n = g.order();
    let xp = shifted_powers("x", &XY, n);
    let yp = shifted_powers("y", &XY, n);
    let mut q = SparsePoly::zero(&XY);
    for (r, row) in hist.iter().enumerate() {
        for (k, &count) in row.iter().enumerate() {
            if count > 0 {
                q = &q + &(&xp[r] * &yp[k]).scale(&BigInt::from(count));
            }
        }
    }
    Ok(q)
}

/// `q_N(G;x) = Σ_W (x−1)^{n(G[W])}`, the vertex-nullity state sum.
pub fn qn_statesum(g: &Graph) -> Result<SparsePoly> {
    g.require_simple()?;
    let hist = rank_histogram(g)?;
    let n = g.order();
    let xp = shifted_powers("x", &X, n);
    let mut by_nullity = vec![0u64; n + 1];
    for row in &hist {
        for (k, &count) in row.iter().enumerate() {
            by_nullity[k] += count;
        }
    }
    let mut qn = SparsePoly::zero(&X);
    for (k, &count) in by_nullity.iter().enumerate() {
        if count > 0 {
            qn = &qn + &xp[k].scale(&BigInt::from(count));
        }
    }
    Ok(qn)
}

/// `q_N(G;x) = q(G;2,x)`, via the two-variable state sum.
pub fn qn_from_q(g: &Graph) -> Result<SparsePoly> {
    g.require_simple()?;
    q_statesum(g)?.specialize("x", 2)?.with_var_names(&X)
}

/// Which reduction applies first when a graph has both a loop-free edge and a
/// looped vertex. Both orders give the same polynomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReductionOrder {
    #[default]
    PivotFirst,
    LoopFirst,
}

/// Vertex-labelled adjacency with removable vertices, keyed for memoization.
#[derive(Clone)]
struct Dense {
    words: usize,
    alive: BitSet,
    adj: Vec<BitSet>,
}

impl Dense {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        Dense {
            words: n.div_ceil(64).max(1),
            alive: BitSet::from_indices(n, 0..n),
            adj: g.rows().to_vec(),
        }
    }

    fn remove(&mut self, v: usize) {
        let nb = std::mem::take(&mut self.adj[v]);
        for u in nb.iter() {
            self.adj[u].remove(v);
        }
        self.alive.remove(v);
    }

    fn without(&self, vs: &[usize]) -> Dense {
        let mut d = self.clone();
        for &v in vs {
            d.remove(v);
        }
        d
    }

    fn key(&self) -> Vec<u64> {
        let mut key = Vec::with_capacity(self.words * (self.alive.len() + 1));
        let push = |key: &mut Vec<u64>, b: &BitSet| {
            let w = b.words();
            key.extend((0..self.words).map(|i| w.get(i).copied().unwrap_or(0)));
        };
        push(&mut key, &self.alive);
        for i in self.alive.iter() {
            push(&mut key, &self.adj[i]);
        }
        key
    }

    fn looped(&self, v: usize) -> bool {
        self.adj[v].contains(v)
    }

    fn first_edge(&self, skip_looped: bool) -> Option<(usize, usize)> {
        self.alive.iter().filter(|&a| !(skip_looped && self.looped(a))).find_map(|a| {
            self.adj[a]
                .iter()
                .find(|&b| b > a && !(skip_looped && self.looped(b)))
                .map(|b| (a, b))
        })
    }

    fn first_loop(&self) -> Option<usize> {
        self.alive.iter().find(|&a| self.looped(a))
    }
}

struct QRecursion {
    order: ReductionOrder,
    memo: HashMap<Vec<u64>, SparsePoly>,
    y: SparsePoly,
    x_minus_1: SparsePoly,
    pivot_factor: SparsePoly,
}

impl QRecursion {
    fn new(order: ReductionOrder) -> Self {
        let x = SparsePoly::var(&XY, "x").expect("x");
        let one = SparsePoly::one(&XY);
        let x_minus_1 = &x - &one;
        let pivot_factor = &(&x_minus_1 * &x_minus_1) - &one;
        QRecursion {
            order,
            memo: HashMap::new(),
            y: SparsePoly::var(&XY, "y").expect("y"),
            x_minus_1,
            pivot_factor,
        }
    }

    fn eval(&mut self, d: &Dense) -> SparsePoly {
        let key = d.key();
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let edge = d.first_edge(true);
        let looped = d.first_loop();
        let use_loop = match (edge, looped, self.order) {
            (None, None, _) => {
                let p = self.y.pow(d.alive.len() as u32);
                self.memo.insert(key, p.clone());
                return p;
            }
            (Some(_), None, _) => false,
            (None, Some(_), _) => true,
            (Some(_), Some(_), ReductionOrder::PivotFirst) => false,
            (Some(_), Some(_), ReductionOrder::LoopFirst) => true,
        };
        let p = if use_loop {
            // q(G) = q(G−a) + (x−1) q(G^a − a)
            let a = looped.expect("looped vertex");
            let minus = self.eval(&d.without(&[a]));
            let mut lc = d.clone();
            local_complement_rows(&mut lc.adj, a);
            lc.remove(a);
            let comp = self.eval(&lc);
            &minus + &(&self.x_minus_1 * &comp)
        } else {
            // q(G) = q(G−a) + q(G^{ab}−b) + ((x−1)²−1) q(G^{ab}−a−b)
            let (a, b) = edge.expect("edge");
            let minus_a = self.eval(&d.without(&[a]));
            let mut piv = d.clone();
            pivot_rows(&mut piv.adj, a, b);
            let piv_minus_b = self.eval(&piv.without(&[b]));
            let piv_minus_ab = self.eval(&piv.without(&[a, b]));
            &(&minus_a + &piv_minus_b) + &(&self.pivot_factor * &piv_minus_ab)
        };
        self.memo.insert(key, p.clone());
        p
    }
}

/// `q(G;x,y)` by the pivot and loop recursions, base `q(E_n) = yⁿ`.
pub fn q_recursive(g: &Graph) -> SparsePoly {
    q_recursive_with(g, ReductionOrder::default())
}

pub fn q_recursive_with(g: &Graph, order: ReductionOrder) -> SparsePoly {
    QRecursion::new(order).eval(&Dense::new(g))
}

struct QnRecursion {
    memo: HashMap<Vec<u64>, SparsePoly>,
    x: SparsePoly,
}

impl QnRecursion {
    fn eval(&mut self, d: &Dense) -> SparsePoly {
        let key = d.key();
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let p = match d.first_edge(false) {
            None => self.x.pow(d.alive.len() as u32),
            Some((v, w)) => {
                // q_N(G) = q_N(G−v) + q_N(G^{vw}−w)
                let minus_v = self.eval(&d.without(&[v]));
                let mut piv = d.clone();
                pivot_rows(&mut piv.adj, v, w);
                piv.remove(w);
                &minus_v + &self.eval(&piv)
            }
        };
        self.memo.insert(key, p.clone());
        p
    }
}

/// `q_N(G;x)` by the pivot recursion, base `q_N(E_n) = xⁿ`.
pub fn qn_recursive(g: &Graph) -> Result<SparsePoly> {
    g.require_simple()?;
    let mut rec = QnRecursion {
        memo: HashMap::new(),
        x: SparsePoly::var(&X, "x").expect("x"),
    };
    Ok(rec.eval(&Dense::new(g)))
}

/// Coefficient of `x¹` in `q_N`.
pub fn gamma(g: &Graph) -> Result<BigInt> {
    Ok(qn_statesum(g)?.coefficient(&[1]))
}

/// Coefficient identities linking `q` and `q_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientReport {
    /// Coefficient of `x¹y⁰` in `q`.
    pub a10: BigInt,
    /// Coefficient of `x⁰y¹` in `q`.
    pub a01: BigInt,
    /// The antisymmetry claim needs at least two vertices.
    pub antisymmetry_applies: bool,
    pub antisymmetric: bool,
    /// Coefficient of `x¹` in `q_N`, i.e. γ.
    pub a1: BigInt,
    /// `Σ_i a_{i,1} 2^i` over the coefficients of `q`.
    pub weighted_sum: BigInt,
    pub a1_matches: bool,
}

impl CoefficientReport {
    pub fn holds(&self) -> bool {
        self.a1_matches && (!self.antisymmetry_applies || self.antisymmetric)
    }
}

pub fn coefficient_checks(g: &Graph) -> Result<CoefficientReport> {
    g.require_simple()?;
    let q = q_statesum(g)?;
    let qn = qn_statesum(g)?;
    let a10 = q.coefficient(&[1, 0]);
    let a01 = q.coefficient(&[0, 1]);
    let mut weighted_sum = BigInt::zero();
    let mut pow2 = BigInt::one();
    for i in 0..=q.degree_in("x")? {
        weighted_sum += q.coefficient(&[i, 1]) * &pow2;
        pow2 *= 2;
    }
    let a1 = qn.coefficient(&[1]);
    Ok(CoefficientReport {
        antisymmetric: a10 == -&a01,
        antisymmetry_applies: g.order() >= 2,
        a1_matches: a1 == weighted_sum,
        a10,
        a01,
        a1,
        weighted_sum,
    })
}
