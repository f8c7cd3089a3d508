//! Packing number: the largest pairwise-disjoint subfamily.
//!
//! Exact values come from a branch-and-bound search for a maximum
//! independent set in the intersection graph. Candidates are ordered by a
//! greedy clique cover of the intersection graph; a subfamily can use at
//! most one rectangle per clique, so the cover size bounds what the current
//! branch can still add.

use serde::Serialize;

use super::greedy_lines;
use crate::error::{Error, Result};
use crate::geom::{Axis, Family};

pub const DEFAULT_EXACT_LIMIT: usize = 64;

#[derive(Clone, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    fn and_assign(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }
}

/// A maximum pairwise-disjoint subfamily.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Packing {
    pub size: usize,
    /// Rect ids in increasing order.
    pub witness: Vec<usize>,
}

struct Search {
    /// `meets[v]`: rectangles intersecting `v`, excluding `v`.
    meets: Vec<BitSet>,
    /// `apart[v]`: rectangles disjoint from `v`.
    apart: Vec<BitSet>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search {
    /// Greedy clique cover of `cand`, returned as `(vertex, cliques so far)`
    /// in cover order.
    fn cover(&self, cand: &BitSet) -> Vec<(usize, usize)> {
        let mut rest = cand.clone();
        let mut order = Vec::new();
        let mut cliques = 0;
        while !rest.is_empty() {
            cliques += 1;
            let mut open = rest.clone();
            while let Some(v) = open.first() {
                open.remove(v);
                open.and_assign(&self.meets[v]);
                rest.remove(v);
                order.push((v, cliques));
            }
        }
        order
    }

    fn expand(&mut self, mut cand: BitSet) {
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        for (v, bound) in self.cover(&cand).into_iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = cand.and(&self.apart[v]);
            self.expand(next);
            self.current.pop();
            cand.remove(v);
        }
    }
}

/// Exact packing number for families of at most `limit` rectangles.
pub fn packing_number_exact(f: &Family, limit: usize) -> Result<Packing> {
    let n = f.len();
    if n > limit {
        return Err(Error::ExactUnavailable { n, limit });
    }
    let mut meets = vec![BitSet::empty(n); n];
    let mut apart = vec![BitSet::empty(n); n];
    for a in f {
        for b in f {
            if a.id == b.id {
                continue;
            }
            if a.intersects(b) {
                meets[a.id].insert(b.id);
            } else {
                apart[a.id].insert(b.id);
            }
        }
    }
    let mut search = Search { meets, apart, current: Vec::new(), best: Vec::new() };
    search.expand(BitSet::full(n));
    let mut witness = search.best;
    witness.sort_unstable();
    Ok(Packing { size: witness.len(), witness })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingBounds {
    /// `max(q_h, q_v)`: the greedy witnesses are pairwise disjoint.
    pub lower: usize,
    pub exact: Option<Packing>,
}

pub fn packing_bounds(f: &Family, limit: usize) -> Result<PackingBounds> {
    let q_h = greedy_lines(f, Axis::Y)?.len();
    let q_v = greedy_lines(f, Axis::X)?.len();
    let exact = match packing_number_exact(f, limit) {
        Ok(p) => Some(p),
        Err(Error::ExactUnavailable { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(PackingBounds { lower: q_h.max(q_v), exact })
}
