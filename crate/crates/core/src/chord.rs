//! Chord diagrams as double-occurrence words, their circle graphs, the
//! arc-exchange pivot, and the one-vertex C-polynomial.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interlace::q_statesum;
use crate::poly::SparsePoly;

/// Variables of the C-polynomial. `X` never occurs for one-vertex diagrams.
pub const YZ: [&str; 2] = ["Y", "Z"];

/// Largest diagram accepted by the sub-diagram state sum.
pub const MAX_CPOLY_CHORDS: usize = 20;

/// A cyclic word in which every label occurs exactly twice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    word: Vec<String>,
}

impl ChordDiagram {
    pub fn new<S: Into<String>>(word: impl IntoIterator<Item = S>) -> Result<Self> {
        let word: Vec<String> = word.into_iter().map(Into::into).collect();
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for l in &word {
            *counts.entry(l.as_str()).or_default() += 1;
        }
        if let Some((l, c)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::MalformedDiagram(format!("label `{l}` occurs {c} times")));
        }
        Ok(ChordDiagram { word })
    }

    /// Whitespace-separated labels on one line, e.g. `1 2 1 3 2 3`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.split_whitespace())
    }

    pub fn word(&self) -> &[String] {
        &self.word
    }

    pub fn chord_count(&self) -> usize {
        self.word.len() / 2
    }

    /// Labels in order of first occurrence.
    pub fn labels(&self) -> Vec<&str> {
        let mut seen = HashSet::new();
        self.word
            .iter()
            .filter(|l| seen.insert(l.as_str()))
            .map(String::as_str)
            .collect()
    }

    fn positions(&self) -> HashMap<&str, (usize, usize)> {
        let mut pos: HashMap<&str, (usize, usize)> = HashMap::new();
        for (i, l) in self.word.iter().enumerate() {
            pos.entry(l.as_str())
                .and_modify(|p| p.1 = i)
                .or_insert((i, usize::MAX));
        }
        pos
    }

    fn endpoints(&self, label: &str) -> Result<(usize, usize)> {
        self.positions()
            .get(label)
            .copied()
            .ok_or_else(|| Error::MalformedDiagram(format!("no chord `{label}`")))
    }

    /// Whether chords `a` and `b` cross: exactly one end of `b` lies between the ends of `a`.
    pub fn crosses(&self, a: &str, b: &str) -> Result<bool> {
        let (a0, a1) = self.endpoints(a)?;
        let (b0, b1) = self.endpoints(b)?;
        Ok(a != b && ((a0 < b0 && b0 < a1) != (a0 < b1 && b1 < a1)))
    }

    /// Intersection graph of the chords, vertices in first-occurrence order.
    pub fn circle_graph(&self) -> Graph {
        let labels = self.labels();
        let pos = self.positions();
        let mut g = Graph::with_vertices(labels.iter().copied()).expect("labels distinct");
        let ends: Vec<(usize, usize)> = labels.iter().map(|l| pos[l]).collect();
        for (i, &(a0, a1)) in ends.iter().enumerate() {
            for (j, &(b0, b1)) in ends.iter().enumerate().skip(i + 1) {
                if (a0 < b0 && b0 < a1) != (a0 < b1 && b1 < a1) {
                    g.set_edge_idx(i, j, true);
                }
            }
        }
        g
    }

    /// The word read from position `k` onwards, cyclically.
    pub fn rotated(&self, k: usize) -> ChordDiagram {
        let n = self.word.len();
        let word = (0..n).map(|i| self.word[(i + k) % n.max(1)].clone()).collect();
        ChordDiagram { word }
    }

    pub fn reflected(&self) -> ChordDiagram {
        ChordDiagram { word: self.word.iter().rev().cloned().collect() }
    }

    /// Sub-diagram on the chords for which `keep` is true.
    pub fn restrict(&self, keep: impl Fn(&str) -> bool) -> ChordDiagram {
        ChordDiagram { word: self.word.iter().filter(|l| keep(l)).cloned().collect() }
    }

    pub fn without(&self, labels: &[&str]) -> ChordDiagram {
        self.restrict(|l| !labels.contains(&l))
    }

    /// Diagram whose circle graph is the pivot of this one's at `a`, `b`.
    ///
    /// Writing the word as `a X b Y a Z b W`, the arcs `X` and `Z` are
    /// exchanged, which pivots the circle graph and swaps the neighbourhoods
    /// of `a` and `b`; the two labels are then exchanged to undo the swap.
    pub fn chord_pivot(&self, a: &str, b: &str) -> Result<ChordDiagram> {
        if !self.crosses(a, b)? {
            return Err(Error::ChordsDoNotCross(a.to_string(), b.to_string()));
        }
        let start = self.endpoints(a)?.0;
        let w = self.rotated(start).word;
        let b1 = w.iter().position(|l| l == b).expect("b present");
        let a2 = w.iter().skip(1).position(|l| l == a).expect("a twice") + 1;
        let b2 = w.iter().skip(a2).position(|l| l == b).expect("b after a") + a2;
        let (x, y, z, rest) = (&w[1..b1], &w[b1 + 1..a2], &w[a2 + 1..b2], &w[b2 + 1..]);
        let mut out = Vec::with_capacity(w.len());
        out.push(b.to_string());
        out.extend_from_slice(z);
        out.push(a.to_string());
        out.extend_from_slice(y);
        out.push(b.to_string());
        out.extend_from_slice(x);
        out.push(a.to_string());
        out.extend_from_slice(rest);
        let pivoted = ChordDiagram { word: out };
        if pivoted.circle_graph() != self.circle_graph().pivot(a, b)? {
            return Err(Error::Internal(format!("arc exchange at {a},{b} disagrees with graph pivot")));
        }
        Ok(pivoted)
    }

    /// `C(D;X,Y,Z) = Σ_{D'⊆D} Y^{n(D')} Z^{r(D')}` with `r(D') = rank/2` of
    /// the circle graph of `D'`.
    pub fn c_polynomial(&self) -> Result<SparsePoly> {
        let labels = self.labels();
        let k = labels.len();
        if k > MAX_CPOLY_CHORDS {
            return Err(Error::TooLarge(k));
        }
        let mut hist: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for mask in 0u64..(1 << k) {
            let sub = self.restrict(|l| {
                let i = labels.iter().position(|m| *m == l).expect("label");
                mask >> i & 1 == 1
            });
            let h = sub.circle_graph();
            let rank = h.rank_of_mask(&BitSet::from_indices(h.order(), 0..h.order()));
            if rank & 1 == 1 {
                return Err(Error::Internal(format!("odd rank {rank} for a circle graph")));
            }
            *hist.entry((mask.count_ones(), rank as u32 / 2)).or_default() += 1;
        }
        Ok(SparsePoly::from_terms(&YZ, hist.into_iter().map(|((n, r), c)| (vec![n, r], c))))
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word.join(" "))
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram({self})")
    }
}

/// Exact integer square root, failing on non-squares.
pub fn exact_sqrt(z: &BigInt) -> Result<BigInt> {
    if z.is_negative() {
        return Err(Error::NotPerfectSquare(z.clone()));
    }
    let s = z.sqrt();
    if &s * &s == *z {
        Ok(s)
    } else {
        Err(Error::NotPerfectSquare(z.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CpolyPoint {
    pub y: BigInt,
    pub z: BigInt,
    /// `C(D; Y, Z)`.
    pub c_value: BigInt,
    /// `q(H; Y√Z + 1, Y + 1)`.
    pub q_value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CpolyReport {
    pub diagram: String,
    pub points: Vec<CpolyPoint>,
}

impl CpolyReport {
    pub fn holds(&self) -> bool {
        self.points.iter().all(|p| p.c_value == p.q_value)
    }
}

fn yz_point(y: &BigInt, z: &BigInt) -> BTreeMap<String, BigInt> {
    BTreeMap::from([("Y".to_string(), y.clone()), ("Z".to_string(), z.clone())])
}

/// Compare `C(D;Y,Z)` with `q(H;Y√Z+1,Y+1)` at each point; every `Z` must be
/// a perfect square.
pub fn verify_cpoly_identity(d: &ChordDiagram, points: &[(i64, i64)]) -> Result<CpolyReport> {
    let c = d.c_polynomial()?;
    let q = q_statesum(&d.circle_graph())?;
    let mut out = Vec::with_capacity(points.len());
    for &(y, z) in points {
        let (y, z) = (BigInt::from(y), BigInt::from(z));
        let s = exact_sqrt(&z)?;
        let c_value = c.eval_int(&yz_point(&y, &z))?;
        let q_value = q.eval_slice(&[&y * &s + 1, &y + 1]);
        out.push(CpolyPoint { y, z, c_value, q_value });
    }
    Ok(CpolyReport { diagram: d.to_string(), points: out })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CReductionReport {
    pub a: String,
    pub b: String,
    /// `C(D) = C(D−a) + C(D^{ab}−a) + (Y²Z−1) C(D^{ab}−a−b)` at every point.
    pub second_term_minus_a: bool,
    /// Same with second term `C(D^{ab}−b)`, the form matching the pivot recursion of `q`.
    pub second_term_minus_b: bool,
}

pub const DEFAULT_SQUARE_POINTS: [(i64, i64); 4] = [(1, 1), (2, 4), (3, 9), (5, 16)];

/// Test both readings of the C-polynomial reduction for crossing chords `a`, `b`.
pub fn verify_c_reduction(d: &ChordDiagram, a: &str, b: &str, points: &[(i64, i64)]) -> Result<CReductionReport> {
    let piv = d.chord_pivot(a, b)?;
    let c = |dd: &ChordDiagram| dd.c_polynomial();
    let whole = c(d)?;
    let minus_a = c(&d.without(&[a]))?;
    let piv_minus_a = c(&piv.without(&[a]))?;
    let piv_minus_b = c(&piv.without(&[b]))?;
    let piv_minus_ab = c(&piv.without(&[a, b]))?;
    let factor = SparsePoly::from_terms(&YZ, [(vec![2, 1], 1), (vec![0, 0], -1)]);
    let tail = &factor * &piv_minus_ab;
    let variant_a = &(&minus_a + &piv_minus_a) + &tail;
    let variant_b = &(&minus_a + &piv_minus_b) + &tail;
    let mut ok_a = true;
    let mut ok_b = true;
    for &(y, z) in points {
        let (y, z) = (BigInt::from(y), BigInt::from(z));
        exact_sqrt(&z)?;
        let pt = yz_point(&y, &z);
        let lhs = whole.eval_int(&pt)?;
        ok_a &= variant_a.eval_int(&pt)? == lhs;
        ok_b &= variant_b.eval_int(&pt)? == lhs;
    }
    Ok(CReductionReport {
        a: a.to_string(),
        b: b.to_string(),
        second_term_minus_a: ok_a,
        second_term_minus_b: ok_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> ChordDiagram {
        ChordDiagram::parse(s).unwrap()
    }

    #[test]
    fn circle_graph_examples() {
        assert_eq!(d("1 2 1 2").circle_graph(), Graph::from_edges(&[("1", "2")]));
        assert_eq!(d("1 2 2 1").circle_graph(), Graph::with_vertices(["1", "2"]).unwrap());
        assert_eq!(d("1 2 1 3 2 3").circle_graph(), Graph::from_edges(&[("1", "2"), ("2", "3")]));
    }

    #[test]
    fn malformed_words() {
        assert!(matches!(ChordDiagram::parse("1 2 1"), Err(Error::MalformedDiagram(_))));
        assert!(matches!(ChordDiagram::parse("1 1 1 1"), Err(Error::MalformedDiagram(_))));
        assert!(ChordDiagram::parse("").unwrap().labels().is_empty());
    }

    #[test]
    fn pivot_examples() {
        let k2 = d("1 2 1 2");
        assert_eq!(k2.chord_pivot("1", "2").unwrap().circle_graph(), k2.circle_graph());
        let p3 = d("1 2 1 3 2 3");
        assert_eq!(p3.chord_pivot("1", "2").unwrap().circle_graph(), p3.circle_graph());
        assert!(matches!(d("1 2 2 1").chord_pivot("1", "2"), Err(Error::ChordsDoNotCross(..))));
    }

    #[test]
    fn c_polynomial_examples() {
        assert_eq!(ChordDiagram::parse("").unwrap().c_polynomial().unwrap(), SparsePoly::one(&YZ));
        let nested = SparsePoly::from_terms(&YZ, [(vec![0, 0], 1), (vec![1, 0], 2), (vec![2, 0], 1)]);
        assert_eq!(d("1 2 2 1").c_polynomial().unwrap(), nested);
        let crossing = SparsePoly::from_terms(&YZ, [(vec![0, 0], 1), (vec![1, 0], 2), (vec![2, 1], 1)]);
        assert_eq!(d("1 2 1 2").c_polynomial().unwrap(), crossing);
    }

    #[test]
    fn cpoly_identity_worked_case() {
        let r = verify_cpoly_identity(&d("1 2 1 2"), &[(3, 4), (0, 0)]).unwrap();
        assert_eq!(r.points[0].c_value, 43.into());
        assert_eq!(r.points[0].q_value, 43.into());
        assert_eq!(r.points[1].c_value, 1.into());
        assert!(r.holds());
        assert!(matches!(verify_cpoly_identity(&d("1 2 1 2"), &[(1, 2)]), Err(Error::NotPerfectSquare(_))));
    }

    #[test]
    fn reduction_on_single_crossing() {
        let r = verify_c_reduction(&d("1 2 1 2"), "1", "2", &DEFAULT_SQUARE_POINTS).unwrap();
        assert!(r.second_term_minus_a && r.second_term_minus_b);
        assert!(matches!(
            verify_c_reduction(&d("1 2 2 1"), "1", "2", &DEFAULT_SQUARE_POINTS),
            Err(Error::ChordsDoNotCross(..))
        ));
    }

    #[test]
    fn rotations_and_reflection_keep_circle_graph() {
        let base = d("a b c a d b e c e d");
        let g = base.circle_graph();
        for k in 0..base.word().len() {
            assert_eq!(base.rotated(k).circle_graph(), g);
            assert_eq!(base.rotated(k).reflected().circle_graph(), g);
        }
    }
}
