//! Brute-force reference implementations used to check the solvers. They work
//! on a plain adjacency matrix and share no code with the library beyond
//! reading edges out of a `Graph`.

#![allow(dead_code)]

use egt_core::Graph;

pub struct Matrix {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    /// Edges `(u, v)`, `u < v`, in lexicographic order.
    pub edges: Vec<(usize, usize)>,
}

impl Matrix {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adj[u][v] {
                    edges.push((u, v));
                }
            }
        }
        Self { n, adj, edges }
    }

    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.adj[a][b] && self.adj[a][c] && self.adj[b][c] {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }

    fn edge_in(&self, subset: u64, u: usize, v: usize) -> bool {
        let (u, v) = (u.min(v), u.max(v));
        let k = self.edges.iter().position(|&e| e == (u, v)).expect("edge");
        subset >> k & 1 == 1
    }

    /// Lexicographic edge ids (over all vertex pairs) of a subset of `edges`.
    pub fn ids(&self, subset: u64) -> Vec<usize> {
        let n = self.n;
        self.edges
            .iter()
            .enumerate()
            .filter(|(k, _)| subset >> k & 1 == 1)
            .map(|(_, &(u, v))| (0..u).map(|x| n - 1 - x).sum::<usize>() + (v - u - 1))
            .collect()
    }

    /// Optimum over all `2^m` edge subsets of a feasibility predicate, with the
    /// lexicographically least optimal id list.
    fn best_subset(&self, feasible: impl Fn(u64) -> bool, maximise: bool) -> (usize, Vec<usize>) {
        let m = self.edges.len();
        let mut best: Option<(usize, Vec<usize>)> = None;
        for subset in 0u64..1 << m {
            if !feasible(subset) {
                continue;
            }
            let size = subset.count_ones() as usize;
            let ids = self.ids(subset);
            let better = match &best {
                None => true,
                Some((s, w)) => {
                    (maximise && size > *s) || (!maximise && size < *s) || (size == *s && ids < *w)
                }
            };
            if better {
                best = Some((size, ids));
            }
        }
        best.expect("the empty set or the full set is always feasible")
    }

    /// `α₁` and its least witness.
    pub fn alpha1(&self) -> (usize, Vec<usize>) {
        let tris = self.triangles();
        self.best_subset(
            |s| {
                tris.iter().all(|&(a, b, c)| {
                    [(a, b), (a, c), (b, c)].iter().filter(|&&(x, y)| self.edge_in(s, x, y)).count() <= 1
                })
            },
            true,
        )
    }

    /// `τ` and its least witness.
    pub fn tau(&self) -> (usize, Vec<usize>) {
        let tris = self.triangles();
        self.best_subset(
            |s| {
                tris.iter()
                    .all(|&(a, b, c)| [(a, b), (a, c), (b, c)].iter().any(|&(x, y)| self.edge_in(s, x, y)))
            },
            false,
        )
    }

    /// `τ_B` as the fewest monochromatic edges over all `2^n` colourings.
    pub fn tau_b(&self) -> usize {
        (0u32..1 << self.n)
            .map(|col| self.edges.iter().filter(|&&(u, v)| (col >> u & 1) == (col >> v & 1)).count())
            .min()
            .unwrap_or(0)
    }

    /// True iff some 2-colouring of `set` has no monochromatic edge.
    pub fn set_is_bipartite(&self, set: u32) -> bool {
        let verts: Vec<usize> = (0..self.n).filter(|v| set >> v & 1 == 1).collect();
        (0u32..1 << verts.len()).any(|col| {
            verts.iter().enumerate().all(|(i, &u)| {
                verts.iter().enumerate().all(|(j, &v)| !self.adj[u][v] || (col >> i & 1) != (col >> j & 1))
            })
        })
    }

    /// `b` and the lexicographically least maximum vertex list.
    pub fn b(&self) -> (usize, Vec<usize>) {
        let mut best: (usize, Vec<usize>) = (0, vec![]);
        for set in 0u32..1 << self.n {
            if !self.set_is_bipartite(set) {
                continue;
            }
            let verts: Vec<usize> = (0..self.n).filter(|v| set >> v & 1 == 1).collect();
            if verts.len() > best.0 || (verts.len() == best.0 && verts < best.1) {
                best = (verts.len(), verts);
            }
        }
        best
    }
}

/// Upper-triangle bit string (column-major) of `g` relabelled by `perm`,
/// minimised over every permutation with no pruning.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        // position p holds old vertex perm[p]
        let mut s = Vec::with_capacity(n * n / 2);
        for j in 1..n {
            for i in 0..j {
                s.push(g.has_edge(perm[i], perm[j]));
            }
        }
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every labelled graph on `n` vertices, deduplicated by [`brute_canonical`].
pub fn brute_isomorphism_classes(n: usize) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes: Vec<Vec<bool>> = (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            brute_canonical(&Graph::from_edges(n, edges).unwrap())
        })
        .collect();
    classes.sort();
    classes.dedup();
    classes
}

/// Every multiset of positive parts summing to `total`, parts non-decreasing.
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rest {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, 1, &mut Vec::new(), &mut out);
    out
}
