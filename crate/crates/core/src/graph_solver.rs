//! Feasibility tests and the optimizer for general graphs.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::geometry::{candidate_values_graph, feasible_intervals, FeasibleIntervals};
use crate::model::{EdgePoint, Instance, Solution};
use crate::piercing::{pierce, rectangle_set_from_intervals, BoundingBox};
use crate::scalar::Scalar;
use crate::solve::SolveError;

/// Feasible intervals of every paired vertex on every edge for one λ.
pub struct IntervalTable<'a> {
    instance: &'a Instance,
    // row per vertex, column per edge; unpaired vertices keep empty rows
    rows: Vec<Vec<FeasibleIntervals>>,
}

impl<'a> IntervalTable<'a> {
    pub fn new(instance: &'a Instance, lambda: &Scalar) -> Self {
        let mut rows = alloc::vec![Vec::new(); instance.vertex_count()];
        for p in instance.pairs() {
            for v in [p.v, p.u] {
                rows[v] = (0..instance.edge_count()).map(|e| feasible_intervals(instance, v, e, lambda)).collect();
            }
        }
        IntervalTable { instance, rows }
    }

    /// Points `q1 ∈ e1`, `q2 ∈ e2` with every φ_i ≤ λ, if any.
    pub fn local(&self, e1: usize, e2: usize) -> Option<(EdgePoint, EdgePoint)> {
        let mut sets = Vec::with_capacity(self.instance.pair_count());
        for (i, p) in self.instance.pairs().iter().enumerate() {
            let set = rectangle_set_from_intervals(
                i,
                &self.rows[p.v][e1],
                &self.rows[p.u][e2],
                &self.rows[p.u][e1],
                &self.rows[p.v][e2],
            )?;
            sets.push(set);
        }
        let bbox = BoundingBox {
            width: self.instance.edge(e1).length.clone(),
            height: self.instance.edge(e2).length.clone(),
        };
        let (x, y) = pierce(&bbox, &sets).expect("interval rectangles are corner-anchored")?;
        Some((EdgePoint { edge: e1, t: x }, EdgePoint { edge: e2, t: y }))
    }
}

/// All unordered edge pairs `(e1, e2)` with `e1 ≤ e2`, in ascending order.
pub fn edge_pairs(m: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (0..m).flat_map(move |a| (a..m).map(move |b| (a, b)))
}

/// Local feasibility on one edge pair.
pub fn local_feasibility(instance: &Instance, e1: usize, e2: usize, lambda: &Scalar) -> Option<(EdgePoint, EdgePoint)> {
    IntervalTable::new(instance, lambda).local(e1, e2)
}

/// Witness centers for `lambda`, or `None` when `lambda < λ*`. Edge pairs are
/// tried in ascending order and the first witness wins.
pub fn feasibility_graph(instance: &Instance, lambda: &Scalar) -> Option<(EdgePoint, EdgePoint)> {
    let table = IntervalTable::new(instance, lambda);
    edge_pairs(instance.edge_count()).find_map(|(a, b)| table.local(a, b))
}

/// Smallest candidate value accepted by `feasible`, with its witness.
pub(crate) fn search_candidates<F>(candidates: &[Scalar], mut feasible: F) -> Option<(Scalar, EdgePoint, EdgePoint)>
where
    F: FnMut(&Scalar) -> Option<(EdgePoint, EdgePoint)>,
{
    let last = candidates.last()?;
    let mut best = feasible(last).map(|(q1, q2)| (last.clone(), q1, q2))?;
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        match feasible(&candidates[mid]) {
            Some((q1, q2)) => {
                best = (candidates[mid].clone(), q1, q2);
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    Some(best)
}

/// Turns a witness at `lambda` into a solution, checking that the witness
/// attains exactly `lambda`.
pub(crate) fn finish_solution(instance: &Instance, lambda: Scalar, q1: EdgePoint, q2: EdgePoint) -> Result<Solution, SolveError> {
    let assignment = instance.best_assignment(&q1, &q2);
    let value = instance.objective(&q1, &q2, Some(&assignment));
    if value != lambda {
        return Err(SolveError::Inconsistent { claimed: Box::new(lambda), evaluated: Box::new(value) });
    }
    Ok(Solution { lambda, q1, q2, assignment })
}

/// Optimum on a general graph by binary search over the candidate values.
pub fn solve_graph(instance: &Instance) -> Result<Solution, SolveError> {
    solve_graph_with(instance, |lambda| feasibility_graph(instance, lambda))
}

/// Same as [`solve_graph`] with a caller-supplied feasibility test, e.g. one
/// that fans the edge pairs out over threads.
pub fn solve_graph_with<F>(instance: &Instance, feasible: F) -> Result<Solution, SolveError>
where
    F: FnMut(&Scalar) -> Option<(EdgePoint, EdgePoint)>,
{
    if instance.edge_count() == 0 {
        return Err(SolveError::NoEdges);
    }
    let candidates = candidate_values_graph(instance);
    let (lambda, q1, q2) = search_candidates(&candidates, feasible).ok_or(SolveError::NoFeasibleCandidate)?;
    finish_solution(instance, lambda, q1, q2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{InstanceSpec, Orientation};
    use alloc::vec;

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn path(weights: &[i64], pairs: &[(usize, usize)]) -> Instance {
        let n = weights.len();
        Instance::build(&InstanceSpec {
            weights: weights.iter().map(|&w| int(w)).collect(),
            edges: (0..n - 1).map(|i| (i, i + 1, int(1))).collect(),
            pairs: pairs.to_vec(),
        })
        .unwrap()
    }

    #[test]
    fn local_feasibility_on_outer_edges() {
        let inst = path(&[1, 1, 1, 1], &[(0, 3), (1, 2)]);
        let (q1, q2) = local_feasibility(&inst, 0, 2, &frac(1, 2)).unwrap();
        assert!(inst.objective(&q1, &q2, None) <= frac(1, 2));
        assert_eq!(local_feasibility(&inst, 0, 2, &frac(2, 5)), None);
    }

    #[test]
    fn same_edge_at_one_center_value() {
        let inst = path(&[1, 1, 1, 1], &[(0, 3), (1, 2)]);
        // one center of everything on edge (1,2) is its midpoint, value 3/2
        let (q1, q2) = local_feasibility(&inst, 1, 1, &frac(3, 2)).unwrap();
        assert!(inst.objective(&q1, &q2, None) <= frac(3, 2));
    }

    #[test]
    fn solves_unit_path() {
        let inst = path(&[1, 1, 1, 1], &[(0, 3), (1, 2)]);
        let sol = solve_graph(&inst).unwrap();
        assert_eq!(sol.lambda, frac(1, 2));
        let mids = [EdgePoint { edge: 0, t: frac(1, 2) }, EdgePoint { edge: 2, t: frac(1, 2) }];
        assert!(mids.iter().any(|m| inst.same_point(m, &sol.q1)));
        assert!(mids.iter().any(|m| inst.same_point(m, &sol.q2)));
        assert!(!inst.same_point(&sol.q1, &sol.q2));
        assert_eq!(inst.objective(&sol.q1, &sol.q2, Some(&sol.assignment)), sol.lambda);
    }

    #[test]
    fn solves_weighted_path() {
        let inst = path(&[2, 1, 1, 1], &[(0, 3), (1, 2)]);
        assert_eq!(solve_graph(&inst).unwrap().lambda, frac(2, 3));
    }

    #[test]
    fn single_pair_is_free() {
        let inst = path(&[3, 1, 1, 4], &[(1, 3)]);
        let sol = solve_graph(&inst).unwrap();
        assert_eq!(sol.lambda, int(0));
        assert_eq!(sol.assignment.len(), 1);
    }

    #[test]
    fn ties_assign_forward() {
        let inst = path(&[0, 0, 0, 0], &[(0, 3), (1, 2)]);
        let sol = solve_graph(&inst).unwrap();
        assert_eq!(sol.lambda, int(0));
        assert_eq!(sol.assignment, vec![Orientation::Forward; 2]);
    }
}
