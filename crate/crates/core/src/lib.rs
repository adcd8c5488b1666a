//! Exact solvers for the metric-dimension family of graph invariants.
//!
//! For a connected graph and an ordered vertex set `W`, the representation
//! of a vertex `v` is the vector of its distances to the members of `W`.
//! `W` resolves the graph when all representations are distinct. Around
//! that single definition this crate computes, for graphs of up to 64
//! vertices:
//!
//! - `beta`, the metric dimension: the smallest size of a resolving set;
//! - `res`, the resolving number: the smallest k such that *every* k-set
//!   resolves;
//! - `bas`, the basis number: the largest r such that every r-set extends
//!   to some minimum resolving set;
//! - whether the graph is randomly k-dimensional, i.e. every beta-set is
//!   a basis (equivalently `beta == res`, equivalently `bas == beta`).
//!
//! The [`theorems`] module re-verifies a battery of structural facts
//! about these invariants on any corpus; [`corpus`] reads and writes
//! graph6 and edge lists, generates named families, and enumerates every
//! connected labeled graph of order at most 7; [`oracle`] holds the slow
//! definition-level reference implementations the fast paths are tested
//! against.
//!
//! ```
//! use resolvent::{metric, DistanceMatrix, Graph};
//!
//! let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?;
//! let report = metric::solve(&c5)?;
//! assert_eq!((report.beta, report.res, report.bas), (2, 2, 2));
//! assert!(report.is_randomly_k);
//! # Ok::<(), resolvent::Error>(())
//! ```

pub mod corpus;
mod distance;
mod error;
mod graph;
pub mod metric;
pub mod oracle;
mod set;
pub mod summary;
pub mod theorems;

pub use distance::DistanceMatrix;
pub use error::Error;
pub use graph::{Graph, MAX_VERTICES};
pub use metric::SolveReport;
pub use set::{k_subsets, VertexSet};
pub use summary::GraphSummary;
