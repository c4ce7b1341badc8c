use super::SolveResult;
use crate::graph::{bits, low_mask, EdgeSet, Graph, MAX_VERTICES};

type Rows = [u32; MAX_VERTICES];

/// Triangle-branching search for small triangle edge covers. `keep` marks
/// edges that may not be deleted.
struct CoverSearch {
    n: usize,
    nodes: u64,
}

impl CoverSearch {
    fn first_triangle(&self, rows: &Rows) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            for b in bits(rows[a] & !low_mask(a + 1)) {
                let common = rows[a] & rows[b] & !low_mask(b + 1);
                if common != 0 {
                    return Some((a, b, common.trailing_zeros() as usize));
                }
            }
        }
        None
    }

    /// Greedy count of edge-disjoint triangles; a lower bound on any cover.
    fn packing_bound(&self, rows: &Rows) -> usize {
        let mut rows = *rows;
        let mut count = 0;
        while let Some((a, b, c)) = self.first_triangle(&rows) {
            for (x, y) in [(a, b), (a, c), (b, c)] {
                rows[x] &= !(1 << y);
                rows[y] &= !(1 << x);
            }
            count += 1;
        }
        count
    }

    /// Size of a smallest cover of `rows` avoiding `keep`, if one of size at
    /// most `budget` exists.
    fn min_cover(&mut self, rows: &mut Rows, keep: &mut Rows, budget: usize) -> Option<usize> {
        self.nodes += 1;
        let Some((a, b, c)) = self.first_triangle(rows) else {
            return Some(0);
        };
        if budget == 0 || self.packing_bound(rows) > budget {
            return None;
        }
        let mut best: Option<usize> = None;
        let mut budget = budget;
        let mut marked = [(0, 0); 3];
        let mut n_marked = 0;
        for (x, y) in [(a, b), (a, c), (b, c)] {
            if keep[x] >> y & 1 == 1 {
                continue;
            }
            rows[x] &= !(1 << y);
            rows[y] &= !(1 << x);
            if let Some(rest) = self.min_cover(rows, keep, budget - 1) {
                best = Some(rest + 1);
                budget = rest;
            }
            rows[x] |= 1 << y;
            rows[y] |= 1 << x;
            if budget == 0 {
                break;
            }
            // Later branches keep this edge.
            keep[x] |= 1 << y;
            keep[y] |= 1 << x;
            marked[n_marked] = (x, y);
            n_marked += 1;
        }
        for &(x, y) in &marked[..n_marked] {
            keep[x] &= !(1 << y);
            keep[y] &= !(1 << x);
        }
        best
    }
}

/// Minimum triangle edge cover.
pub fn tau(g: &Graph) -> SolveResult<EdgeSet> {
    let mut search = CoverSearch { n: g.n(), nodes: 0 };
    let mut rows: Rows = [0; MAX_VERTICES];
    rows[..g.n()].copy_from_slice(g.rows());
    let mut keep: Rows = [0; MAX_VERTICES];
    let value = search.min_cover(&mut rows, &mut keep, g.m()).expect("deleting every edge is a cover");

    // Lexicographically least optimal cover: take each edge, in id order, if an
    // optimal cover extending the choices so far still exists.
    let mut chosen = Vec::with_capacity(value);
    let mut keep: Rows = [0; MAX_VERTICES];
    for (u, v) in g.edges() {
        let left = value - chosen.len();
        if left == 0 {
            break;
        }
        let in_triangle = rows[u] & rows[v] != 0;
        if in_triangle {
            rows[u] &= !(1 << v);
            rows[v] &= !(1 << u);
            if search.min_cover(&mut rows, &mut keep, left - 1).is_some() {
                chosen.push((u, v));
                continue;
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        keep[u] |= 1 << v;
        keep[v] |= 1 << u;
    }
    let witness = EdgeSet::from_pairs(g, chosen).expect("cover edges come from the host graph");
    SolveResult::exact(value, witness, search.nodes)
}
