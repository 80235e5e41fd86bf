//! File formats, instance generation, verification and parallel feasibility
//! on top of `bicenter-core`.

pub mod format;
pub mod gen;
pub mod report;
pub mod verify;

use bicenter_core::graph_solver::{edge_pairs, IntervalTable};
use bicenter_core::{solve_with, EdgePoint, Instance, Scalar, Solution, SolveError, SolverKind};
use rayon::prelude::*;

/// Graph feasibility with the edge pairs spread over the rayon pool. With
/// `deterministic` the witness is the one the sequential scan would return.
pub fn parallel_feasibility(instance: &Instance, lambda: &Scalar, deterministic: bool) -> Option<(EdgePoint, EdgePoint)> {
    let table = IntervalTable::new(instance, lambda);
    let pairs: Vec<(usize, usize)> = edge_pairs(instance.edge_count()).collect();
    let local = |&(a, b): &(usize, usize)| table.local(a, b);
    if deterministic {
        pairs.par_iter().find_map_first(local)
    } else {
        pairs.par_iter().find_map_any(local)
    }
}

/// [`bicenter_core::solve`] with the parallel graph feasibility test.
pub fn solve_parallel(
    instance: &Instance,
    kind: Option<SolverKind>,
    deterministic: bool,
) -> Result<(Solution, SolverKind), SolveError> {
    solve_with(instance, kind, |inst, lambda| parallel_feasibility(inst, lambda, deterministic))
}
