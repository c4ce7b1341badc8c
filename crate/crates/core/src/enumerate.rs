//! Isomorph-free generation of all graphs on `n` vertices.
//!
//! Level `k + 1` is built from level `k` by attaching a new vertex to every
//! subset of the existing vertices, canonicalising each child and keeping one
//! representative per canonical string.

use rayon::prelude::*;

use crate::graph::{canonical_form, CanonicalForm, Graph, MAX_VERTICES};

/// Largest `n` the built-in enumerator accepts.
pub const MAX_ENUMERATION_VERTICES: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("enumeration needs at least one vertex")]
    NoVertices,
    #[error("enumeration of n = {n} exceeds the budget of {max} vertices")]
    BudgetExceeded { n: usize, max: usize },
}

/// One representative per isomorphism class, each in canonical labelling,
/// sorted by canonical string.
#[derive(Debug, Clone)]
pub struct EnumerationLevel {
    pub n: usize,
    pub graphs: Vec<Graph>,
}

impl EnumerationLevel {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

fn check_n(n: usize) -> Result<(), EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::NoVertices);
    }
    if n > MAX_ENUMERATION_VERTICES {
        return Err(EnumerateError::BudgetExceeded { n, max: MAX_ENUMERATION_VERTICES });
    }
    Ok(())
}

fn canon(g: &Graph) -> CanonicalForm {
    canonical_form(g).expect("enumeration stays within canonical-form capacity")
}

/// Sorted, deduplicated canonical forms of every one-vertex extension.
fn extend(parents: &[CanonicalForm]) -> Vec<CanonicalForm> {
    let mut children: Vec<CanonicalForm> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let g = parent.to_graph();
            let k = g.n();
            debug_assert!(k < MAX_VERTICES);
            let mut rows = [0u32; MAX_VERTICES];
            rows[..k].copy_from_slice(g.rows());
            (0u32..1 << k).map(move |attach| {
                let mut child = rows;
                child[k] = attach;
                for (v, row) in child.iter_mut().enumerate().take(k) {
                    *row |= (attach >> v & 1) << k;
                }
                canon(&Graph::from_rows_unchecked(k + 1, &child[..k + 1]))
            })
        })
        .collect();
    children.par_sort_unstable();
    children.dedup();
    children
}

fn forms(n: usize) -> Result<Vec<CanonicalForm>, EnumerateError> {
    check_n(n)?;
    let mut level = vec![canon(&Graph::empty(1).expect("one vertex"))];
    for _ in 1..n {
        level = extend(&level);
    }
    Ok(level)
}

/// All non-isomorphic graphs on `n` vertices (`1 <= n <= 9`).
pub fn enumerate_all(n: usize) -> Result<EnumerationLevel, EnumerateError> {
    let graphs = forms(n)?.iter().map(CanonicalForm::to_graph).collect();
    Ok(EnumerationLevel { n, graphs })
}

/// Levels `1..=max_n`, sharing the intermediate work.
pub fn enumerate_levels(max_n: usize) -> Result<Vec<EnumerationLevel>, EnumerateError> {
    check_n(max_n)?;
    let mut out = Vec::with_capacity(max_n);
    let mut level = vec![canon(&Graph::empty(1).expect("one vertex"))];
    for n in 1..=max_n {
        if n > 1 {
            level = extend(&level);
        }
        out.push(EnumerationLevel { n, graphs: level.iter().map(CanonicalForm::to_graph).collect() });
    }
    Ok(out)
}

/// Streams the graphs of [`enumerate_all`] to `sink` in increasing canonical
/// order and returns how many were delivered. Only the canonical strings of
/// the final level are held in memory.
pub fn enumerate_stream<F>(n: usize, mut sink: F) -> Result<usize, EnumerateError>
where
    F: FnMut(&Graph),
{
    let level = forms(n)?;
    for form in &level {
        sink(&form.to_graph());
    }
    Ok(level.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_level_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn levels_agree_with_single_runs() {
        let levels = enumerate_levels(5).unwrap();
        for level in &levels {
            assert_eq!(level.graphs, enumerate_all(level.n).unwrap().graphs);
        }
    }

    #[test]
    fn precondition_errors() {
        assert_eq!(enumerate_all(0).unwrap_err(), EnumerateError::NoVertices);
        assert_eq!(enumerate_stream(0, |_| {}).unwrap_err(), EnumerateError::NoVertices);
        assert!(matches!(enumerate_all(10), Err(EnumerateError::BudgetExceeded { n: 10, .. })));
    }

    #[test]
    fn stream_is_strictly_increasing() {
        let mut seen = Vec::new();
        let count = enumerate_stream(5, |g| seen.push(canonical_form(g).unwrap())).unwrap();
        assert_eq!(count, 34);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }
}
