//! Exact solvers for the four edge/vertex parameters.
//!
//! | function                   | value                                             | witness    |
//! |----------------------------|---------------------------------------------------|------------|
//! | [`alpha1`]                 | largest triangle-independent edge set             | `EdgeSet`  |
//! | [`tau`]                    | smallest edge set whose removal kills all triangles | `EdgeSet`  |
//! | [`tau_b`]                  | smallest edge set whose removal leaves a bipartite graph | `EdgeSet` |
//! | [`max_induced_bipartite`]  | largest vertex set inducing a bipartite subgraph  | `VertexSet`|
//!
//! Every solver is single-threaded, deterministic, and returns the
//! lexicographically least optimal witness (ascending id lists compared
//! lexicographically).

mod alpha1;
mod bipartite;
mod bipartization;
mod tau;

pub use alpha1::alpha1;
pub use bipartite::{max_induced_bipartite, tau_b};
pub use bipartization::{derandomized_bipartization, randomized_bipartization, BipartizationStats};
pub use tau::tau;

use crate::graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub nodes_explored: u64,
    /// Always true: every solver here is exact.
    pub optimal: bool,
}

impl<W> SolveResult<W> {
    pub(crate) fn exact(value: usize, witness: W, nodes_explored: u64) -> Self {
        Self { value, witness, nodes_explored, optimal: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("the vertex set does not induce a bipartite subgraph")]
    NotBipartite,
    #[error("at least one trial is required")]
    NoTrials,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
