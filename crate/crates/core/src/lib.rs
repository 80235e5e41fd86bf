//! Exact solvers for the weighted bichromatic two-center problem.
//!
//! Given an undirected graph with vertex weights and edge lengths and a set of
//! disjoint vertex pairs, place two centers `q1`, `q2` anywhere on the graph
//! (vertices or edge interiors) and send one member of every pair to each
//! center, minimizing the largest weighted distance from a vertex to its
//! center. All arithmetic is exact.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod geometry;
pub mod graph_solver;
pub mod lazy_min;
pub mod metric;
pub mod model;
pub mod oracle;
pub mod piercing;
pub mod solve;
pub mod tree;
pub mod scalar;

pub use metric::RootedTree;
pub use model::{BuildError, Edge, EdgePoint, Instance, InstanceSpec, Orientation, Pair, Solution};
pub use scalar::{ParseScalarError, Scalar};
pub use oracle::{oracle_feasible, oracle_pierce, oracle_solve, Oracle, OracleError, DEFAULT_ORACLE_CAP};
pub use solve::{solve, solve_with, SolveError, SolverKind};
