use std::cmp::Ordering;
use std::fmt;

use super::{bits, Graph, GraphError, MAX_VERTICES};

const WORDS: usize = (MAX_VERTICES * (MAX_VERTICES - 1) / 2).div_ceil(64);

/// Number of vertex pairs on `n` vertices, `C(n, 2)`.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Id of the pair `{u, v}`; pairs are numbered lexicographically by `(min, max)`.
#[inline]
pub fn edge_id(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(u != v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Inverse of [`edge_id`].
pub fn edge_pair(n: usize, id: usize) -> (usize, usize) {
    debug_assert!(id < pair_count(n));
    let mut rest = id;
    let mut u = 0;
    loop {
        let row = n - u - 1;
        if rest < row {
            return (u, u + 1 + rest);
        }
        rest -= row;
        u += 1;
    }
}

/// A subset of the edges of a host graph, stored as a bit-vector over edge ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    n: usize,
    host_m: usize,
    bits: [u64; WORDS],
}

impl EdgeSet {
    pub fn empty(host: &Graph) -> Self {
        Self { n: host.n(), host_m: host.m(), bits: [0; WORDS] }
    }

    /// Every edge of `host`.
    pub fn full(host: &Graph) -> Self {
        let mut s = Self::empty(host);
        for (u, v) in host.edges() {
            s.insert_unchecked(u, v);
        }
        s
    }

    pub fn from_pairs<I>(host: &Graph, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = Self::empty(host);
        for (u, v) in pairs {
            s.insert(host, u, v)?;
        }
        Ok(s)
    }

    pub fn from_ids<I>(host: &Graph, ids: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let n = host.n();
        let mut s = Self::empty(host);
        for id in ids {
            if id >= pair_count(n) {
                return Err(GraphError::VertexOutOfRange { v: id, n });
            }
            let (u, v) = edge_pair(n, id);
            s.insert(host, u, v)?;
        }
        Ok(s)
    }

    /// Builds the set of host edges `uv` with bit `v` set in `rows[u]`.
    pub(crate) fn from_rows_unchecked(host: &Graph, rows: &[u32]) -> Self {
        let mut s = Self::empty(host);
        for u in 0..host.n() {
            for v in bits(rows[u].checked_shr(u as u32 + 1).unwrap_or(0)) {
                s.insert_unchecked(u, u + 1 + v);
            }
        }
        s
    }

    pub fn insert(&mut self, host: &Graph, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n || u == v || !host.has_edge(u, v) {
            return Err(GraphError::NotAHostEdge(u.min(v), u.max(v)));
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) {
        let id = edge_id(self.n, u, v);
        self.bits[id / 64] |= 1 << (id % 64);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count of the host graph.
    #[inline]
    pub fn host_m(&self) -> usize {
        self.host_m
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains_id(&self, id: usize) -> bool {
        id < pair_count(self.n) && self.bits[id / 64] >> (id % 64) & 1 == 1
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.contains_id(edge_id(self.n, u, v))
    }

    /// Set edge ids in ascending order.
    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// Set edges as `(u, v)` pairs with `u < v`, in id order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ids().map(|id| edge_pair(self.n, id))
    }

    /// Adjacency rows of the spanning subgraph with this edge set.
    pub fn rows(&self) -> [u32; MAX_VERTICES] {
        let mut rows = [0u32; MAX_VERTICES];
        for (u, v) in self.pairs() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        rows
    }

    /// `N_S(v)` as a vertex bitmask.
    pub fn neighbors_in(&self, v: usize) -> u32 {
        (0..self.n)
            .filter(|&w| w != v && self.contains(v, w))
            .fold(0, |acc, w| acc | 1 << w)
    }
}

impl Ord for EdgeSet {
    /// Lexicographic order on the ascending lists of edge ids.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.ids().cmp(other.ids()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs().map(|(u, v)| format!("{u}-{v}"))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn ids_are_lexicographic_and_round_trip() {
        for n in 2..=MAX_VERTICES {
            let mut expect = 0;
            for u in 0..n {
                for v in u + 1..n {
                    assert_eq!(edge_id(n, u, v), expect);
                    assert_eq!(edge_id(n, v, u), expect);
                    assert_eq!(edge_pair(n, expect), (u, v));
                    expect += 1;
                }
            }
            assert_eq!(expect, pair_count(n));
        }
    }

    #[test]
    fn only_host_edges_can_be_set() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(EdgeSet::from_pairs(&g, [(1, 2)]).is_err());
        assert!(EdgeSet::from_ids(&g, [7]).is_err());
        let s = EdgeSet::from_pairs(&g, [(1, 0)]).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.contains(0, 1) && s.contains(1, 0));
    }

    #[test]
    fn full_set_of_k32_fills_every_id() {
        let g = complete(32).unwrap();
        let s = EdgeSet::full(&g);
        assert_eq!(s.len(), 496);
        assert_eq!(s.ids().last(), Some(495));
        assert_eq!(s.rows()[31].count_ones(), 31);
    }

    #[test]
    fn order_is_lexicographic_on_id_lists() {
        let g = complete(4).unwrap();
        let a = EdgeSet::from_ids(&g, [0, 5]).unwrap();
        let b = EdgeSet::from_ids(&g, [1, 2]).unwrap();
        assert!(a < b);
    }
}
