use super::{bits, low_mask, EdgeSet, Graph, GraphError, VertexSet, MAX_VERTICES};

/// A triangle `a < b < c` of a host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triangle {
    /// The three edges `ab`, `ac`, `bc`, in edge-id order.
    pub fn edges(&self) -> [(usize, usize); 3] {
        [(self.a, self.b), (self.a, self.c), (self.b, self.c)]
    }
}

/// All triangles of `g`, sorted ascending.
pub fn triangles(g: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in bits(g.row(a) & !low_mask(a + 1)) {
            let common = g.row(a) & g.row(b) & !low_mask(b + 1);
            out.extend(bits(common).map(|c| Triangle { a, b, c }));
        }
    }
    out
}

/// `d_S(v)`: number of edges of `s` incident to `v`.
pub fn degree_in(s: &EdgeSet, v: usize) -> usize {
    s.neighbors_in(v).count_ones() as usize
}

/// True iff every triangle of `g` has at most one edge in `a`.
pub fn is_triangle_independent(g: &Graph, a: &EdgeSet) -> bool {
    let rows = a.rows();
    // A triangle with two edges of `a` has one of them, uv, plus an A-edge from
    // u or v to a common neighbour of u and v.
    a.pairs().all(|(u, v)| (rows[u] | rows[v]) & g.row(u) & g.row(v) == 0)
}

/// True iff `G \ x` has no triangle.
pub fn is_triangle_edge_cover(g: &Graph, x: &EdgeSet) -> bool {
    g.without_edges(x).is_triangle_free()
}

/// Proper 2-colouring of the subgraph induced by `mask`, as (side 0, side 1)
/// bitmasks. The lowest vertex of every component lands on side 0.
pub(crate) fn two_coloring(rows: &[u32], mask: u32) -> Option<(u32, u32)> {
    let mut sides = [0u32; 2];
    let mut uncolored = mask;
    while uncolored != 0 {
        let mut frontier = uncolored & uncolored.wrapping_neg();
        let mut side = 0;
        while frontier != 0 {
            sides[side] |= frontier;
            uncolored &= !frontier;
            let mut next = 0;
            for v in bits(frontier) {
                next |= rows[v];
            }
            frontier = next & uncolored;
            side ^= 1;
        }
    }
    for side in sides {
        if bits(side).any(|v| rows[v] & side != 0) {
            return None;
        }
    }
    Some((sides[0], sides[1]))
}

/// Breadth-first 2-colouring of every component. Returns the two colour
/// classes when `g` is bipartite.
pub fn is_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let (s0, s1) = two_coloring(g.rows(), g.vertex_mask())?;
    Some((VertexSet { n: g.n(), mask: s0 }, VertexSet { n: g.n(), mask: s1 }))
}

/// `G[S]`, relabelled by ascending order of `S`.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph, GraphError> {
    if s.n() != g.n() {
        return Err(GraphError::VertexOutOfRange { v: s.n(), n: g.n() });
    }
    let verts = s.to_vec();
    let mut rows = [0u32; MAX_VERTICES];
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate() {
            if g.has_edge(u, v) {
                rows[i] |= 1 << j;
            }
        }
    }
    Ok(Graph::from_rows_unchecked(verts.len(), &rows[..verts.len()]))
}

pub fn complement(g: &Graph) -> Graph {
    let full = g.vertex_mask();
    let rows: Vec<u32> = (0..g.n()).map(|v| !g.row(v) & full & !(1 << v)).collect();
    Graph::from_rows_unchecked(g.n(), &rows)
}

pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::empty(n)
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Ok(complement(&Graph::empty(n)?))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    join(&[Graph::empty(a)?, Graph::empty(b)?])
}

/// `C_n` on `0-1-…-(n-1)-0`. Needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidConstruction("a cycle needs at least 3 vertices"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n` on `0-1-…-(n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Disjoint union; the vertices of `gs[i]` follow those of `gs[i-1]`.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph, GraphError> {
    let n: usize = gs.iter().map(Graph::n).sum();
    if n > MAX_VERTICES {
        return Err(GraphError::CapacityExceeded { n, max: MAX_VERTICES });
    }
    let mut rows = Vec::with_capacity(n);
    let mut offset = 0;
    for g in gs {
        rows.extend(g.rows().iter().map(|r| r << offset));
        offset += g.n();
    }
    Ok(Graph::from_rows_unchecked(n, &rows))
}

/// `G_1 ∨ … ∨ G_t`: the disjoint union plus every edge between different parts.
pub fn join(gs: &[Graph]) -> Result<Graph, GraphError> {
    let union = disjoint_union(gs)?;
    let mut rows = union.rows().to_vec();
    let mut offset = 0;
    for g in gs {
        let own = low_mask(g.n()) << offset;
        for r in &mut rows[offset..offset + g.n()] {
            *r |= union.vertex_mask() & !own;
        }
        offset += g.n();
    }
    Ok(Graph::from_rows_unchecked(union.n(), &rows))
}
