//! Bipartizing a graph around an induced bipartite vertex set `B`.
//!
//! Keep the 2-colouring of `G[B]`, put every other vertex on one of its two
//! sides, and delete the edges that end up inside a side. A uniform random
//! placement deletes each edge outside `E(G[B])` with probability 1/2; the
//! greedy placement never does worse than that average.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::bipartite::{inner_edges, monochromatic_edges};
use super::SolverError;
use crate::graph::{bits, two_coloring, EdgeSet, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq)]
pub struct BipartizationStats {
    pub trials: u64,
    /// Sum of deleted-edge counts over all trials.
    pub total_deleted: u64,
    pub mean: f64,
    /// Sample standard deviation of the per-trial counts.
    pub std_dev: f64,
    /// Smallest deletion set seen; ties go to the earliest trial.
    pub best: EdgeSet,
    pub best_trial: u64,
    /// `|E(G) \ E(G[B])|`; the expected deletion count is half of this.
    pub outside_edges: usize,
}

impl BipartizationStats {
    pub fn std_error(&self) -> f64 {
        self.std_dev / (self.trials as f64).sqrt()
    }
}

fn base_sides(g: &Graph, b: &VertexSet) -> Result<(u32, u32), SolverError> {
    if b.n() != g.n() {
        return Err(crate::graph::GraphError::VertexOutOfRange { v: b.n(), n: g.n() }.into());
    }
    two_coloring(g.rows(), b.mask()).ok_or(SolverError::NotBipartite)
}

/// Side 1 of the placement used by `trial`; side 0 is the complement.
fn random_side(g: &Graph, b: &VertexSet, sides: (u32, u32), seed: u64, trial: u64) -> u32 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut side1 = sides.1;
    for v in bits(g.vertex_mask() & !b.mask()) {
        if rng.gen::<bool>() {
            side1 |= 1 << v;
        }
    }
    side1
}

fn deleted_count(g: &Graph, side1: u32) -> usize {
    inner_edges(g, side1) + inner_edges(g, g.vertex_mask() & !side1)
}

/// Runs `trials` independent uniform placements. Trial `t` draws from stream
/// `t` of a ChaCha generator seeded with `seed`, so results do not depend on
/// scheduling.
pub fn randomized_bipartization(
    g: &Graph,
    b: &VertexSet,
    trials: u64,
    seed: u64,
) -> Result<BipartizationStats, SolverError> {
    if trials == 0 {
        return Err(SolverError::NoTrials);
    }
    let sides = base_sides(g, b)?;
    let (sum, sum_sq, (best_count, best_trial)) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let c = deleted_count(g, random_side(g, b, sides, seed, t)) as u64;
            (c, c as u128 * c as u128, (c, t))
        })
        .reduce(
            || (0, 0, (u64::MAX, u64::MAX)),
            |x, y| (x.0 + y.0, x.1 + y.1, x.2.min(y.2)),
        );
    debug_assert!(best_count != u64::MAX);
    let mean = sum as f64 / trials as f64;
    let variance = if trials > 1 {
        let t = trials as u128;
        let centered = sum_sq * t - (sum as u128) * (sum as u128);
        centered as f64 / (t * (t - 1)) as f64
    } else {
        0.0
    };
    let best = monochromatic_edges(g, random_side(g, b, sides, seed, best_trial));
    let inside = inner_edges(g, b.mask());
    Ok(BipartizationStats {
        trials,
        total_deleted: sum,
        mean,
        std_dev: variance.sqrt(),
        best,
        best_trial,
        outside_edges: g.m() - inside,
    })
}

/// Method of conditional expectations: vertices outside `B` are placed in
/// ascending order, each on the side holding fewer of its already-placed
/// neighbours (side 0 on ties). Deletes at most `|E(G) \ E(G[B])| / 2` edges.
pub fn derandomized_bipartization(g: &Graph, b: &VertexSet) -> Result<EdgeSet, SolverError> {
    let (mut side0, mut side1) = base_sides(g, b)?;
    for v in bits(g.vertex_mask() & !b.mask()) {
        let to0 = (g.row(v) & side0).count_ones();
        let to1 = (g.row(v) & side1).count_ones();
        if to0 <= to1 {
            side0 |= 1 << v;
        } else {
            side1 |= 1 << v;
        }
    }
    Ok(monochromatic_edges(g, side1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, is_bipartite};

    #[test]
    fn bipartite_host_with_full_b_deletes_nothing() {
        let g = complete_bipartite(2, 3).unwrap();
        let all = VertexSet::all(5).unwrap();
        let stats = randomized_bipartization(&g, &all, 50, 7).unwrap();
        assert_eq!(stats.mean, 0.0);
        assert!(stats.best.is_empty());
        assert!(derandomized_bipartization(&g, &all).unwrap().is_empty());
    }

    #[test]
    fn k4_around_an_edge() {
        let k4 = complete(4).unwrap();
        let b = VertexSet::from_vertices(4, &[0, 1]).unwrap();
        let d = derandomized_bipartization(&k4, &b).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.pairs().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        let stats = randomized_bipartization(&k4, &b, 4000, 1).unwrap();
        assert_eq!(stats.outside_edges, 5);
        assert!(stats.best.len() >= 2);
        assert!((stats.mean - 2.5).abs() < 0.1, "mean {}", stats.mean);
        assert!(is_bipartite(&k4.without_edges(&stats.best)).is_some());
    }

    #[test]
    fn rejects_non_bipartite_b_and_zero_trials() {
        let k3 = complete(3).unwrap();
        let all = VertexSet::all(3).unwrap();
        assert_eq!(derandomized_bipartization(&k3, &all), Err(SolverError::NotBipartite));
        assert_eq!(randomized_bipartization(&k3, &all, 10, 0), Err(SolverError::NotBipartite));
        let b = VertexSet::from_vertices(3, &[0]).unwrap();
        assert_eq!(randomized_bipartization(&k3, &b, 0, 0), Err(SolverError::NoTrials));
    }

    #[test]
    fn seeded_runs_repeat() {
        let g = cycle(7).unwrap().with_edge(0, 3).unwrap();
        let b = VertexSet::from_vertices(7, &[0, 1, 2]).unwrap();
        let a = randomized_bipartization(&g, &b, 300, 42).unwrap();
        let c = randomized_bipartization(&g, &b, 300, 42).unwrap();
        assert_eq!(a, c);
    }
}
