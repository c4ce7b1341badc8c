use super::SolveResult;
use crate::graph::{bits, two_coloring, EdgeSet, Graph, VertexSet};

/// Number of edges with both ends inside `side`.
#[inline]
pub(crate) fn inner_edges(g: &Graph, side: u32) -> usize {
    bits(side).map(|v| (g.row(v) & side).count_ones() as usize).sum::<usize>() / 2
}

/// Edges with both ends on the same side of the bipartition `(side, rest)`.
pub(crate) fn monochromatic_edges(g: &Graph, side: u32) -> EdgeSet {
    let other = g.vertex_mask() & !side;
    let mut rows = [0u32; crate::graph::MAX_VERTICES];
    for v in 0..g.n() {
        let own = if side >> v & 1 == 1 { side } else { other };
        rows[v] = g.row(v) & own;
    }
    EdgeSet::from_rows_unchecked(g, &rows)
}

/// Minimum edge bipartization, `m − maxcut(G)`, by scanning the `2^(n−1)`
/// bipartitions that put the last vertex on side 0.
pub fn tau_b(g: &Graph) -> SolveResult<EdgeSet> {
    let n = g.n();
    let all = g.vertex_mask();
    let masks: u64 = if n == 0 { 1 } else { 1 << (n - 1) };
    let mut best_cost = usize::MAX;
    let mut best: Option<EdgeSet> = None;
    for mask in 0..masks {
        let side1 = mask as u32;
        let cost = inner_edges(g, side1) + inner_edges(g, all & !side1);
        if cost > best_cost {
            continue;
        }
        let deleted = monochromatic_edges(g, side1);
        if cost < best_cost || best.as_ref().is_some_and(|b| deleted < *b) {
            best_cost = cost;
            best = Some(deleted);
        }
    }
    SolveResult::exact(best_cost, best.expect("at least one bipartition"), masks)
}

struct InducedSearch<'a> {
    g: &'a Graph,
    best: u32,
    nodes: u64,
}

impl InducedSearch<'_> {
    fn run(&mut self, v: usize, set: u32) {
        self.nodes += 1;
        let n = self.g.n();
        if set.count_ones() as usize + (n - v) <= self.best.count_ones() as usize {
            return;
        }
        if v == n {
            self.best = set;
            return;
        }
        let with = set | 1 << v;
        if two_coloring(self.g.rows(), with).is_some() {
            self.run(v + 1, with);
        }
        self.run(v + 1, set);
    }
}

/// Largest vertex set inducing a bipartite subgraph. Vertices are decided in
/// ascending order, including first; bipartiteness is hereditary, so a
/// non-bipartite partial set is never extended.
pub fn max_induced_bipartite(g: &Graph) -> SolveResult<VertexSet> {
    let mut search = InducedSearch { g, best: 0, nodes: 0 };
    search.run(0, 0);
    let witness = VertexSet::from_mask(g.n(), search.best).expect("mask within n");
    SolveResult::exact(witness.len(), witness, search.nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, is_bipartite, path};

    #[test]
    fn tau_b_reference_values() {
        assert_eq!(tau_b(&cycle(5).unwrap()).value, 1);
        assert_eq!(tau_b(&complete(4).unwrap()).value, 2);
        assert_eq!(tau_b(&complete(6).unwrap()).value, 6);
        assert_eq!(tau_b(&complete_bipartite(3, 3).unwrap()).value, 0);
        assert_eq!(tau_b(&path(5).unwrap()).value, 0);
        assert_eq!(tau_b(&Graph::empty(0).unwrap()).value, 0);
        assert_eq!(tau_b(&Graph::empty(1).unwrap()).value, 0);
    }

    #[test]
    fn tau_b_witness_leaves_bipartite_graph() {
        let c5 = cycle(5).unwrap();
        let r = tau_b(&c5);
        assert!(is_bipartite(&c5.without_edges(&r.witness)).is_some());
        // Least single edge: 0-1 (id 0).
        assert_eq!(r.witness.ids().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn b_reference_values() {
        for n in 2..=8 {
            assert_eq!(max_induced_bipartite(&complete(n).unwrap()).value, 2);
        }
        let r = max_induced_bipartite(&cycle(5).unwrap());
        assert_eq!(r.value, 4);
        assert_eq!(r.witness.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(max_induced_bipartite(&complete_bipartite(3, 4).unwrap()).value, 7);
        assert_eq!(max_induced_bipartite(&Graph::empty(0).unwrap()).value, 0);
        assert_eq!(max_induced_bipartite(&complete(1).unwrap()).value, 1);
    }
}
