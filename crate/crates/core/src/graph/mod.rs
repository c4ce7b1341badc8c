//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! A [`Graph`] stores one `u32` adjacency row per vertex: bit `v` of row `u`
//! is set iff `uv` is an edge. All values are immutable once built, so they can
//! be shared freely across worker threads.

mod canon;
mod edges;
mod ops;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANONICAL_VERTICES};
pub use edges::{edge_id, edge_pair, pair_count, EdgeSet};
pub use ops::{
    complement, complete, complete_bipartite, cycle, degree_in, disjoint_union, empty,
    induced_subgraph, is_bipartite, is_triangle_edge_cover, is_triangle_independent, join, path,
    triangles, Triangle,
};
pub(crate) use ops::two_coloring;

use std::fmt;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph would have {n} vertices, capacity is {max}")]
    CapacityExceeded { n: usize, max: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not an edge of the host graph")]
    NotAHostEdge(usize, usize),
    #[error("invalid construction: {0}")]
    InvalidConstruction(&'static str),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded { n, max: MAX_VERTICES });
        }
        Ok(Self { n, m: 0, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric, loop-free and
    /// confined to the first `n` bits.
    pub fn from_rows(n: usize, rows: &[u32]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        if rows.len() != n {
            return Err(GraphError::VertexOutOfRange { v: rows.len(), n });
        }
        for (u, &row) in rows.iter().enumerate() {
            if row & !g.vertex_mask() != 0 {
                let v = (row & !g.vertex_mask()).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] = row;
        }
        for u in 0..n {
            for v in bits(g.adj[u]) {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(GraphError::NotAHostEdge(v, u));
                }
            }
        }
        g.m = g.adj[..n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Ok(g)
    }

    /// Rows are trusted to be symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(n: usize, rows: &[u32]) -> Self {
        debug_assert!(n <= MAX_VERTICES && rows.len() >= n);
        let mut adj = [0; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        let m = adj[..n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Self { n, m, adj }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { v: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.m += 1;
        Ok(())
    }

    /// Copy of `self` with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = *self;
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy of `self` without the edge `uv` (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = *self;
        if u < self.n && v < self.n && g.has_edge(u, v) {
            g.adj[u] &= !(1 << v);
            g.adj[v] &= !(1 << u);
            g.m -= 1;
        }
        g
    }

    /// `G \ X`: the spanning subgraph with the edges of `x` removed.
    pub fn without_edges(&self, x: &EdgeSet) -> Self {
        debug_assert_eq!(x.n(), self.n);
        let mut rows = self.adj;
        let xr = x.rows();
        for (r, d) in rows.iter_mut().zip(xr.iter()) {
            *r &= !d;
        }
        Self::from_rows_unchecked(self.n, &rows[..self.n])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Adjacency row of `v` as a bitmask.
    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Bitmask with the low `n` bits set.
    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        low_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in edge-id order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in bits(self.adj[u].checked_shr(u as u32 + 1).unwrap_or(0)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|u| bits(self.adj[u]).all(|v| self.adj[u] & self.adj[v] == 0))
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut rows = [0u32; MAX_VERTICES];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Self::from_rows_unchecked(self.n, &rows[..self.n])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// A subset of the vertices of a graph on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    mask: u32,
}

impl VertexSet {
    pub fn from_mask(n: usize, mask: u32) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded { n, max: MAX_VERTICES });
        }
        if mask & !low_mask(n) != 0 {
            let v = (mask & !low_mask(n)).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        Ok(Self { n, mask })
    }

    pub fn from_vertices(n: usize, vs: &[usize]) -> Result<Self, GraphError> {
        let mut mask = 0u32;
        for &v in vs {
            if v >= n || v >= MAX_VERTICES {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            mask |= 1 << v;
        }
        Self::from_mask(n, mask)
    }

    pub fn all(n: usize) -> Result<Self, GraphError> {
        Self::from_mask(n, low_mask(n.min(MAX_VERTICES)))
    }

    #[inline]
    pub fn mask(&self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.mask >> v & 1 == 1
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bits(self.mask)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates the set bits of `mask` from lowest to highest.
#[inline]
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
