//! Linear-time solver for trees whose paired vertices share one weight.
//!
//! After pruning, every leaf is paired and the one-center `q*` is the midpoint
//! of a longest path. Its radius `ε*` bounds the optimum; the optimum equals
//! `ε*` when key vertices (those at distance `ε*` from `q*`) sit in three or
//! more subtrees around `q*`, or a pair consists of two key vertices on the
//! same side. Otherwise each center serves the vertices nearer to one key
//! vertex, and its radius is half the largest distance to that key vertex.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::graph_solver::finish_solution;
use crate::model::{EdgePoint, Instance, Orientation, Solution};
use crate::scalar::Scalar;
use crate::solve::{paired_weights_equal, SolveError};
use crate::tree::feasibility::point_from;
use crate::tree::locate::{sweep, Sweep};
use crate::tree::prune::prune_unpaired_leaves;

/// One-center of a pruned tree with the key vertices around it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnweightedCenter {
    pub center: EdgePoint,
    /// Half the longest path length.
    pub radius: Scalar,
    /// Key vertices grouped by the subtree of `center` holding them; groups
    /// and members in ascending id order.
    pub key_groups: Vec<Vec<usize>>,
}

/// Farthest vertex from `source` (lowest id on ties) and all distances.
fn farthest(instance: &Instance, source: usize) -> (usize, Scalar) {
    let mut best = (source, Scalar::zero());
    for v in 0..instance.vertex_count() {
        let d = instance.dist(source, v);
        if d > best.1 {
            best = (v, d);
        }
    }
    best
}

/// The point at distance `s` from `a` on the path from `a` to `b`.
fn point_on_path(instance: &Instance, a: usize, b: usize, s: &Scalar) -> EdgePoint {
    let tree = instance.rooted().expect("tree instance");
    let c = tree.lca(a, b);
    let up = tree.depth(a) - tree.depth(c);
    let (mut x, s) = if *s <= up { (a, s.clone()) } else { (b, &instance.dist(a, b) - s) };
    // climb from x until the remaining distance fits on the parent edge
    let mut left = s;
    loop {
        if left.is_zero() {
            return instance.vertex_point(x);
        }
        let e = tree.parent_edge(x).expect("path stays below the lca");
        let l = &instance.edge(e).length;
        if left <= *l {
            return point_from(instance, e, x, left);
        }
        left = &left - l;
        x = tree.parent(x).expect("has parent");
    }
}

/// One-center, radius and grouped key vertices of a pruned tree.
pub fn unweighted_center(instance: &Instance) -> Result<UnweightedCenter, SolveError> {
    if !instance.is_tree() {
        return Err(SolveError::NotTree);
    }
    if !paired_weights_equal(instance) {
        return Err(SolveError::UnequalWeights);
    }
    let (a, _) = farthest(instance, 0);
    let (b, diameter) = farthest(instance, a);
    let radius = &diameter / &Scalar::from_int(2);
    if diameter.is_zero() {
        let center = instance.vertex_point(a);
        return Ok(UnweightedCenter { center, radius, key_groups: alloc::vec![alloc::vec![a]] });
    }
    let center = point_on_path(instance, a, b, &radius);
    let Sweep { dist, branch, entries } = sweep(instance, &center, instance.point_vertex(&center));
    let mut key_groups: Vec<Vec<usize>> = alloc::vec![Vec::new(); entries.len()];
    for v in 0..instance.vertex_count() {
        if branch[v] != usize::MAX && dist[v] == radius {
            key_groups[branch[v]].push(v);
        }
    }
    key_groups.retain(|g| !g.is_empty());
    key_groups.sort();
    Ok(UnweightedCenter { center, radius, key_groups })
}

/// Optimum of a tree whose paired vertices all have the same weight. Works on
/// the input directly (pruning instead of normalizing).
pub fn solve_tree_unweighted(instance: &Instance) -> Result<Solution, SolveError> {
    if !instance.is_tree() {
        return Err(SolveError::NotTree);
    }
    if !paired_weights_equal(instance) {
        return Err(SolveError::UnequalWeights);
    }
    let pruned = prune_unpaired_leaves(instance)?;
    let tree = &pruned.instance;
    let restore = |p: EdgePoint| {
        if tree.edge_count() == 0 {
            return instance.vertex_point(pruned.vertices[0]);
        }
        EdgePoint { edge: pruned.edges[p.edge], t: p.t }
    };
    if tree.pair_count() == 0 {
        let q = restore(EdgePoint { edge: 0, t: Scalar::zero() });
        return finish_solution(instance, Scalar::zero(), q.clone(), q);
    }
    let w = tree.weight(tree.pair(0).v).clone();
    let UnweightedCenter { center, radius, key_groups } = unweighted_center(tree)?;

    let group_of = |v: usize| key_groups.iter().position(|g| g.contains(&v));
    let same_side_key_pair = tree.pairs().iter().any(|p| matches!((group_of(p.v), group_of(p.u)), (Some(x), Some(y)) if x == y));
    if key_groups.len() > 2 || same_side_key_pair {
        let q = restore(center);
        let assignment = alloc::vec![Orientation::Forward; instance.pair_count()];
        let lambda = &w * &radius;
        let evaluated = instance.objective(&q, &q, Some(&assignment));
        if evaluated != lambda {
            return Err(SolveError::Inconsistent { claimed: Box::new(lambda), evaluated: Box::new(evaluated) });
        }
        return Ok(Solution { lambda, q1: q.clone(), q2: q, assignment });
    }

    let alpha = key_groups[0][0];
    let beta = key_groups[1][0];
    let d = |x: usize, y: usize| tree.dist(x, y);
    let mut assignment = Vec::with_capacity(tree.pair_count());
    let mut far = [(alpha, Scalar::zero()), (beta, Scalar::zero())];
    for p in tree.pairs() {
        let forward = d(p.v, alpha).max(d(p.u, beta));
        let reverse = d(p.u, alpha).max(d(p.v, beta));
        let (to_alpha, to_beta, o) =
            if forward <= reverse { (p.v, p.u, Orientation::Forward) } else { (p.u, p.v, Orientation::Reverse) };
        assignment.push(o);
        for (k, (x, key)) in [(to_alpha, alpha), (to_beta, beta)].into_iter().enumerate() {
            let dx = d(x, key);
            if dx > far[k].1 || (dx == far[k].1 && x < far[k].0 && dx.is_positive()) {
                far[k] = (x, dx);
            }
        }
    }
    let half = Scalar::from_int(2);
    let q1 = point_on_path(tree, alpha, far[0].0, &(&far[0].1 / &half));
    let q2 = point_on_path(tree, beta, far[1].0, &(&far[1].1 / &half));
    let lambda = &w * &(&far[0].1.clone().max(far[1].1.clone()) / &half);
    let (q1, q2) = (restore(q1), restore(q2));
    let evaluated = instance.objective(&q1, &q2, Some(&assignment));
    if evaluated != lambda {
        return Err(SolveError::Inconsistent { claimed: Box::new(lambda), evaluated: Box::new(evaluated) });
    }
    Ok(Solution { lambda, q1, q2, assignment })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::InstanceSpec;
    use alloc::vec;

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn unit_tree(n: usize, edges: &[(usize, usize)], pairs: &[(usize, usize)]) -> Instance {
        Instance::build(&InstanceSpec {
            weights: vec![Scalar::one(); n],
            edges: edges.iter().map(|&(a, b)| (a, b, Scalar::one())).collect(),
            pairs: pairs.to_vec(),
        })
        .unwrap()
    }

    #[test]
    fn path_center() {
        let t = unit_tree(4, &[(0, 1), (1, 2), (2, 3)], &[(0, 3), (1, 2)]);
        let c = unweighted_center(&t).unwrap();
        assert_eq!(c.center, EdgePoint { edge: 1, t: frac(1, 2) });
        assert_eq!(c.radius, frac(3, 2));
        assert_eq!(c.key_groups, vec![vec![0], vec![3]]);
    }

    #[test]
    fn star_and_binary_tree_centers() {
        let star = unit_tree(4, &[(0, 1), (0, 2), (0, 3)], &[]);
        let c = unweighted_center(&star).unwrap();
        assert_eq!(star.point_vertex(&c.center), Some(0));
        assert_eq!(c.radius, Scalar::one());
        assert_eq!(c.key_groups, vec![vec![1], vec![2], vec![3]]);

        let binary = unit_tree(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)], &[]);
        let c = unweighted_center(&binary).unwrap();
        assert_eq!(binary.point_vertex(&c.center), Some(0));
        assert_eq!(c.radius, Scalar::from_int(2));
    }

    #[test]
    fn solves_unit_path() {
        let t = unit_tree(4, &[(0, 1), (1, 2), (2, 3)], &[(0, 3), (1, 2)]);
        let s = solve_tree_unweighted(&t).unwrap();
        assert_eq!(s.lambda, frac(1, 2));
        let mids = [EdgePoint { edge: 0, t: frac(1, 2) }, EdgePoint { edge: 2, t: frac(1, 2) }];
        assert!(mids.contains(&s.q1) && mids.contains(&s.q2) && s.q1 != s.q2);
    }

    #[test]
    fn four_arm_star_hits_radius() {
        let t = unit_tree(5, &[(0, 1), (0, 2), (0, 3), (0, 4)], &[(1, 3), (2, 4)]);
        let s = solve_tree_unweighted(&t).unwrap();
        assert_eq!(s.lambda, Scalar::one());
    }

    #[test]
    fn rejects_mixed_weights() {
        let mut spec = unit_tree(4, &[(0, 1), (1, 2), (2, 3)], &[(0, 3), (1, 2)]).to_spec();
        spec.weights[0] = Scalar::from_int(2);
        let t = Instance::build(&spec).unwrap();
        assert_eq!(solve_tree_unweighted(&t).unwrap_err(), SolveError::UnequalWeights);
    }
}
