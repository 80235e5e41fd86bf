//! Weighted tree solver: centroid rounds narrow the centers down to two edges,
//! then a candidate search on those edges finds the optimum.

use alloc::vec::Vec;

use crate::graph_solver::finish_solution;
use crate::model::{Instance, Solution};
use crate::scalar::Scalar;
use crate::solve::SolveError;
use crate::tree::centroid::region_centroid;
use crate::tree::feasibility::feasible_in;
use crate::tree::locate::{locate_center_subtrees, Designation, HangingSubtreeReport};
use crate::tree::search::smallest_feasible;

/// Outcome of the centroid rounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhaseOne {
    /// A round fixed the optimum outright.
    Verdict(Scalar),
    /// The optimum is `upper` or is attained with `q1` on `e1` and `q2` on `e2`.
    Edges { e1: usize, e2: usize, upper: Scalar },
}

/// `{u} ∪ (region ∩ T_i)`, sorted.
fn restrict(region: &[usize], report: &HangingSubtreeReport, u: usize, i: usize) -> Vec<usize> {
    let mut out: Vec<usize> = region.iter().copied().filter(|&v| v == u || report.subtree_of(v) == Some(i)).collect();
    if !out.contains(&u) {
        out.push(u);
        out.sort_unstable();
    }
    out
}

/// An edge spanned by a region of one or two vertices.
fn region_edge(instance: &Instance, region: &[usize]) -> usize {
    let a = region[0];
    match region.get(1) {
        Some(&b) => *instance
            .incident(a)
            .iter()
            .find(|&&e| instance.edge(e).other(a) == b)
            .expect("two-vertex region is an edge"),
        None => instance.incident(a)[0],
    }
}

enum Regions {
    Shared(Vec<usize>),
    Separate([Vec<usize>; 2]),
}

fn lower(upper: &mut Scalar, report: &HangingSubtreeReport) {
    if report.upper_bound < *upper {
        *upper = report.upper_bound.clone();
    }
}

/// Centroid rounds. Every round either fixes the optimum, or (unless the
/// optimum equals the running upper bound) keeps some optimal placement inside
/// the regions while roughly halving one of them.
pub fn phase_one(instance: &Instance) -> Result<PhaseOne, SolveError> {
    if !instance.is_tree() {
        return Err(SolveError::NotTree);
    }
    // both centers at vertex 0 is always feasible
    let mut upper = instance.one_center_value(&instance.vertex_point(0));
    let mut regions = Regions::Shared((0..instance.vertex_count()).collect());
    loop {
        match &mut regions {
            Regions::Shared(region) => {
                if region.len() <= 2 {
                    let e = region_edge(instance, region);
                    return Ok(PhaseOne::Edges { e1: e, e2: e, upper });
                }
                let u = region_centroid(instance, region);
                let report = locate_center_subtrees(instance, &instance.vertex_point(u))?;
                lower(&mut upper, &report);
                match report.designation {
                    Designation::Verdict(value) => return Ok(PhaseOne::Verdict(value)),
                    Designation::Together(i) => *region = restrict(region, &report, u, i),
                    Designation::Split(a, b) => {
                        let first = restrict(region, &report, u, a);
                        let second = restrict(region, &report, u, b);
                        regions = Regions::Separate([first, second]);
                    }
                }
            }
            Regions::Separate(pair) => {
                let Some(k) = (0..2).find(|&k| pair[k].len() > 2) else {
                    let e1 = region_edge(instance, &pair[0]);
                    let e2 = region_edge(instance, &pair[1]);
                    return Ok(PhaseOne::Edges { e1, e2, upper });
                };
                let u = region_centroid(instance, &pair[k]);
                let report = locate_center_subtrees(instance, &instance.vertex_point(u))?;
                lower(&mut upper, &report);
                // the subtree of u holding the other region
                let other = pair[1 - k].iter().find(|&&v| v != u).and_then(|&v| report.subtree_of(v));
                let target = match report.designation {
                    Designation::Verdict(value) => return Ok(PhaseOne::Verdict(value)),
                    Designation::Together(i) => i,
                    Designation::Split(a, b) => {
                        if other == Some(a) {
                            b
                        } else {
                            a
                        }
                    }
                };
                pair[k] = restrict(&pair[k], &report, u, target);
            }
        }
    }
}

/// Optimum of a fully paired weighted tree.
pub fn solve_tree_weighted(instance: &Instance) -> Result<Solution, SolveError> {
    let tree = instance.rooted().ok_or(SolveError::NotTree)?;
    let lambda = match phase_one(instance)? {
        PhaseOne::Verdict(value) => value,
        PhaseOne::Edges { e1, e2, upper } => {
            let edges: Vec<usize> = if e1 == e2 { alloc::vec![e1] } else { alloc::vec![e1, e2] };
            smallest_feasible(instance, &edges, &upper, |lambda| feasible_in(instance, tree, lambda).is_some())
        }
    };
    let (q1, q2) = feasible_in(instance, tree, &lambda).ok_or(SolveError::NoFeasibleCandidate)?;
    finish_solution(instance, lambda, q1, q2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::InstanceSpec;

    fn path(weights: &[i64]) -> Instance {
        let n = weights.len();
        Instance::build(&InstanceSpec {
            weights: weights.iter().map(|&w| Scalar::from_int(w)).collect(),
            edges: (0..n - 1).map(|i| (i, i + 1, Scalar::one())).collect(),
            pairs: alloc::vec![(0, 3), (1, 2)],
        })
        .unwrap()
    }

    #[test]
    fn unit_and_weighted_paths() {
        assert_eq!(solve_tree_weighted(&path(&[1, 1, 1, 1])).unwrap().lambda, Scalar::from_ratio(1, 2));
        assert_eq!(solve_tree_weighted(&path(&[2, 1, 1, 1])).unwrap().lambda, Scalar::from_ratio(2, 3));
    }
}
