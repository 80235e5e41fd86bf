//! Solver selection and the mapping between an input instance and its
//! normalized form.

use alloc::boxed::Box;
use crate::graph_solver::{feasibility_graph, solve_graph_with};
use crate::model::{EdgePoint, Instance, Solution};
use crate::scalar::Scalar;
use crate::tree::{solve_tree_unweighted, solve_tree_weighted};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("instance is not a tree")]
    NotTree,
    #[error("paired vertices do not all have the same weight")]
    UnequalWeights,
    #[error("instance has no edges")]
    NoEdges,
    #[error("no candidate value passed the feasibility test")]
    NoFeasibleCandidate,
    #[error("solver claimed {claimed} but its centers evaluate to {evaluated}")]
    Inconsistent { claimed: Box<Scalar>, evaluated: Box<Scalar> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverKind {
    Graph,
    Tree,
    TreeUnweighted,
}

impl SolverKind {
    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Graph => "graph",
            SolverKind::Tree => "tree",
            SolverKind::TreeUnweighted => "tree-unweighted",
        }
    }

    /// The fastest solver that applies: unweighted trees, weighted trees, then graphs.
    pub fn detect(instance: &Instance) -> SolverKind {
        if !instance.is_tree() {
            SolverKind::Graph
        } else if paired_weights_equal(instance) {
            SolverKind::TreeUnweighted
        } else {
            SolverKind::Tree
        }
    }
}

/// Whether every vertex that belongs to a pair has the same weight.
pub fn paired_weights_equal(instance: &Instance) -> bool {
    let mut weights = instance.pairs().iter().flat_map(|p| [p.v, p.u]).map(|v| instance.weight(v));
    match weights.next() {
        None => true,
        Some(first) => weights.all(|w| w == first),
    }
}

/// Moves a point on the edge appended by normalization back onto vertex 0.
fn restore_point(original: &Instance, normalized: &Instance, p: EdgePoint) -> EdgePoint {
    if p.edge < original.edge_count() {
        return p;
    }
    let vertex = normalized.point_vertex(&p).filter(|&v| v < original.vertex_count()).unwrap_or(0);
    original.vertex_point(vertex)
}

/// Solves `instance` with the chosen solver (auto-detected when `None`).
///
/// The weighted solvers run on the normalized instance; centers that land on
/// the edge added for an odd vertex count are moved to vertex 0, which serves
/// the original pairs at least as well, and the assignment is cut back to the
/// original pairs. The unweighted solver prunes instead of normalizing.
pub fn solve(instance: &Instance, kind: Option<SolverKind>) -> Result<(Solution, SolverKind), SolveError> {
    solve_with(instance, kind, feasibility_graph)
}

/// [`solve`] with a caller-supplied feasibility test for the graph solver. It
/// receives the normalized instance.
pub fn solve_with<F>(instance: &Instance, kind: Option<SolverKind>, mut graph_feasible: F) -> Result<(Solution, SolverKind), SolveError>
where
    F: FnMut(&Instance, &Scalar) -> Option<(EdgePoint, EdgePoint)>,
{
    let kind = kind.unwrap_or_else(|| SolverKind::detect(instance));
    if instance.edge_count() == 0 {
        return Err(SolveError::NoEdges);
    }
    let solution = match kind {
        SolverKind::TreeUnweighted => solve_tree_unweighted(instance)?,
        SolverKind::Graph | SolverKind::Tree => {
            let normalized = instance.normalize();
            let solution = if kind == SolverKind::Graph {
                solve_graph_with(&normalized, |lambda| graph_feasible(&normalized, lambda))?
            } else {
                solve_tree_weighted(&normalized)?
            };
            Solution {
                lambda: solution.lambda,
                q1: restore_point(instance, &normalized, solution.q1),
                q2: restore_point(instance, &normalized, solution.q2),
                assignment: solution.assignment.into_iter().take(instance.pair_count()).collect(),
            }
        }
    };
    let evaluated = instance.objective(&solution.q1, &solution.q2, Some(&solution.assignment));
    if evaluated != solution.lambda {
        return Err(SolveError::Inconsistent { claimed: Box::new(solution.lambda), evaluated: Box::new(evaluated) });
    }
    Ok((solution, kind))
}
