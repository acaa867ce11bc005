//! Fixed-width bit rows and GF(2) rank.

use std::fmt;

/// A set of small integers backed by `u64` words.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    /// An empty set able to hold `0..n` without growing.
    pub fn new(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    pub fn from_indices(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut b = BitSet::new(n);
        for i in idx {
            b.insert(i);
        }
        b
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn ensure(&mut self, i: usize) {
        let w = i / 64 + 1;
        if self.words.len() < w {
            self.words.resize(w, 0);
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn insert(&mut self, i: usize) {
        self.ensure(i);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / 64) {
            *w &= !(1 << (i % 64));
        }
    }

    pub fn toggle(&mut self, i: usize) {
        self.ensure(i);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn set(&mut self, i: usize, on: bool) {
        if on {
            self.insert(i)
        } else {
            self.remove(i)
        }
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn xor_with(&mut self, other: &BitSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut r = self.clone();
        r.intersect_with(other);
        r
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut r = self.clone();
        r.union_with(other);
        r
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut r = self.clone();
        r.difference_with(other);
        r
    }

    /// Equality as sets, ignoring trailing zero words.
    pub fn same_elements(&self, other: &BitSet) -> bool {
        let n = self.words.len().max(other.words.len());
        (0..n).all(|i| self.words.get(i).copied().unwrap_or(0) == other.words.get(i).copied().unwrap_or(0))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// GF(2) rank of a list of rows.
///
/// Each row is reduced against the basis rows found so far, keyed by their
/// lowest set bit; the pivot column is always the lowest remaining index.
pub fn gf2_rank(rows: impl IntoIterator<Item = BitSet>) -> usize {
    let mut basis: Vec<(usize, BitSet)> = Vec::new();
    for mut row in rows {
        while let Some(p) = row.first() {
            match basis.iter().find(|(q, _)| *q == p) {
                Some((_, b)) => row.xor_with(b),
                None => {
                    basis.push((p, row));
                    break;
                }
            }
        }
    }
    basis.len()
}

/// GF(2) rank of at most 64 rows packed in `u64`s.
pub fn gf2_rank_u64(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let r = rows[i];
        if r == 0 {
            continue;
        }
        let pivot = r & r.wrapping_neg();
        rank += 1;
        for row in rows.iter_mut().skip(i + 1) {
            if *row & pivot != 0 {
                *row ^= r;
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_basics() {
        let mut b = BitSet::new(10);
        b.insert(3);
        b.insert(70);
        assert!(b.contains(70) && b.contains(3) && !b.contains(4));
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![3, 70]);
        b.toggle(3);
        assert_eq!(b.first(), Some(70));
        assert_eq!(b.len(), 1);
        assert!(b.same_elements(&BitSet::from_indices(200, [70])));
    }

    #[test]
    fn rank_small_matrices() {
        // K_3 adjacency: (011),(101),(110) has GF(2) rank 2
        let rows = [0b110u64, 0b101, 0b011];
        assert_eq!(gf2_rank_u64(&mut rows.clone()), 2);
        assert_eq!(gf2_rank(rows.iter().map(|&r| BitSet::from_indices(3, (0..3).filter(|i| r >> i & 1 == 1)))), 2);
        assert_eq!(gf2_rank_u64(&mut [0b10, 0b01]), 2);
        assert_eq!(gf2_rank_u64(&mut [0, 0, 0]), 0);
    }
}
