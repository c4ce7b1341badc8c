//! Exact computation of the triangle-independence number `α₁`, the triangle
//! edge-cover number `τ`, the edge-bipartization number `τ_B` and the largest
//! induced bipartite order `b` of small graphs, together with integer
//! certification of the inequalities that tie them together.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: bitset graphs, edge sets, triangles, constructions and
//!   canonical forms;
//! - [`graph6`]: the graph6 interchange format;
//! - [`enumerate`]: isomorph-free generation of all graphs on `n` vertices;
//! - [`solvers`]: exact solvers and the bipartization procedures;
//! - [`bounds`]: per-graph checks and the join recogniser;
//! - [`harness`]: batch runs used by the command-line tool.

pub mod bounds;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod solvers;

pub use bounds::{BoundReport, Check, CheckName, JoinProfile};
pub use graph::{CanonicalForm, EdgeSet, Graph, GraphError, Triangle, VertexSet};
pub use solvers::SolveResult;
