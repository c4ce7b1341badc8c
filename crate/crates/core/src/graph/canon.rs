//! Canonical forms by permutation minimisation.
//!
//! The canonical string of a graph is the lexicographically least
//! upper-triangle bit string `x(0,1) x(0,2) x(1,2) x(0,3) …` (column-major,
//! the graph6 order) over all relabellings. Vertices are placed one position at
//! a time; placing position `k` fixes the next `k` bits, so a branch is cut as
//! soon as its prefix exceeds the best string found so far.

use super::{pair_count, Graph, GraphError, MAX_VERTICES};

/// Largest `n` accepted by [`canonical_form`]; `C(10, 2) = 45` bits fit a `u64`.
pub const MAX_CANONICAL_VERTICES: usize = 10;

/// Labelling-invariant representative of a graph. Ordered by `n`, then by the
/// canonical bit string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    /// The `C(n, 2)` canonical bits, first bit most significant.
    code: u64,
}

impl CanonicalForm {
    /// The upper-triangle string of `g`'s current labelling, without
    /// minimising. Equal to [`canonical_form`] exactly when `g` is its own
    /// canonical representative.
    pub fn of_labeling(g: &Graph) -> Result<Self, GraphError> {
        let n = g.n();
        if n > MAX_CANONICAL_VERTICES {
            return Err(GraphError::CapacityExceeded { n, max: MAX_CANONICAL_VERTICES });
        }
        Ok(Self { n: n as u8, code: identity_code(g) })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// Byte string `[n, bits…]` with the bit string packed most significant
    /// bit first and zero padded; byte order agrees with [`Ord`].
    pub fn to_bytes(&self) -> Vec<u8> {
        let len = pair_count(self.n());
        let mut out = vec![self.n];
        let mut byte = 0u8;
        for i in 0..len {
            let bit = (self.code >> (len - 1 - i)) & 1;
            byte = byte << 1 | bit as u8;
            if i % 8 == 7 {
                out.push(byte);
                byte = 0;
            }
        }
        if !len.is_multiple_of(8) {
            out.push(byte << (8 - len % 8));
        }
        out
    }

    /// The graph whose identity labelling spells this canonical string.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let len = pair_count(n);
        let mut rows = [0u32; MAX_VERTICES];
        let mut pos = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.code >> (len - 1 - pos)) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                pos += 1;
            }
        }
        Graph::from_rows_unchecked(n, &rows[..n])
    }
}

/// Upper-triangle bit string of the identity labelling.
fn identity_code(g: &Graph) -> u64 {
    let mut code = 0u64;
    for j in 1..g.n() {
        for i in 0..j {
            code = code << 1 | g.has_edge(i, j) as u64;
        }
    }
    code
}

struct Search<'a> {
    rows: &'a [u32],
    n: usize,
    len: usize,
    order: [usize; MAX_CANONICAL_VERTICES],
    best: u64,
    best_order: [usize; MAX_CANONICAL_VERTICES],
}

impl Search<'_> {
    fn run(&mut self, k: usize, used: u32, prefix: u64) {
        if k == self.n {
            if prefix < self.best {
                self.best = prefix;
                self.best_order = self.order;
            }
            return;
        }
        let fixed = pair_count(k + 1);
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut column = 0u64;
            for &u in &self.order[..k] {
                column = column << 1 | (self.rows[u] >> v & 1) as u64;
            }
            let next = prefix << k | column;
            if next > self.best >> (self.len - fixed) {
                continue;
            }
            self.order[k] = v;
            self.run(k + 1, used | 1 << v, next);
        }
    }
}

/// Canonical form together with a canonical labelling `perm`, where old vertex
/// `v` becomes `perm[v]`; `g.relabel(&perm)` spells the canonical string.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(GraphError::CapacityExceeded { n, max: MAX_CANONICAL_VERTICES });
    }
    let mut search = Search {
        rows: g.rows(),
        n,
        len: pair_count(n),
        order: [0; MAX_CANONICAL_VERTICES],
        best: u64::MAX,
        best_order: [0; MAX_CANONICAL_VERTICES],
    };
    search.run(0, 0, 0);
    let code = if n < 2 { 0 } else { search.best };
    let mut perm = vec![0; n];
    for (pos, &old) in search.best_order[..n].iter().enumerate() {
        perm[old] = pos;
    }
    Ok((CanonicalForm { n: n as u8, code }, perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g).map(|(c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn isomorphic_paths_agree() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&complete(3).unwrap()).unwrap());
    }

    #[test]
    fn all_relabellings_of_c4_share_one_form() {
        let c4 = cycle(4).unwrap();
        let expect = canonical_form(&c4).unwrap();
        let mut perms = vec![];
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let p = vec![a, b, c, d];
                        let mut s = p.clone();
                        s.sort();
                        s.dedup();
                        if s.len() == 4 {
                            perms.push(p);
                        }
                    }
                }
            }
        }
        assert_eq!(perms.len(), 24);
        for p in perms {
            assert_eq!(canonical_form(&c4.relabel(&p)).unwrap(), expect);
        }
    }

    #[test]
    fn labelling_spells_the_form() {
        let g = Graph::from_edges(5, [(0, 4), (4, 2), (2, 3)]).unwrap();
        let (form, perm) = canonical_labeling(&g).unwrap();
        let h = g.relabel(&perm);
        assert_eq!(identity_code(&h), form.code());
        assert_eq!(form.to_graph(), h);
    }

    #[test]
    fn tiny_graphs_and_capacity() {
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).unwrap().to_bytes(), vec![0]);
        assert_eq!(canonical_form(&Graph::empty(1).unwrap()).unwrap().to_bytes(), vec![1]);
        // K_2 on two vertices: one set bit.
        assert_eq!(canonical_form(&complete(2).unwrap()).unwrap().to_bytes(), vec![2, 0x80]);
        assert!(canonical_form(&Graph::empty(11).unwrap()).is_err());
    }

    #[test]
    fn minimal_string_prefers_leading_zeros() {
        // The star K_{1,3} minimises to centre last: 000111.
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_form(&star).unwrap().code(), 0b000111);
    }
}
