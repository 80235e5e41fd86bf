//! Linear-time feasibility test on trees.
//!
//! A post-order pass computes, for every vertex `u`, how far above `u` a center
//! may still sit while serving every uncovered vertex of `u`'s subtree:
//! `z(u) = min(λ/w(u), min_c z(c) − l(c, u))`. The first vertex whose slack
//! does not reach its parent forces a center onto its parent edge. The second
//! center is found the same way on the rest of the tree, re-rooted at the
//! parent of the first forced vertex, with vertices already served by the first
//! center ignored.

use alloc::vec;
use alloc::vec::Vec;

use crate::metric::RootedTree;
use crate::model::{EdgePoint, Instance};
use crate::scalar::Scalar;
use crate::solve::SolveError;

/// A point at distance `s` from vertex `from` along edge `e`.
pub(crate) fn point_from(instance: &Instance, e: usize, from: usize, s: Scalar) -> EdgePoint {
    let edge = instance.edge(e);
    let t = if edge.u == from { s } else { &edge.length - &s };
    EdgePoint { edge: e, t }
}

/// `λ / w(v)`, or `None` when `v` imposes no constraint.
fn cap(instance: &Instance, v: usize, lambda: &Scalar) -> Option<Scalar> {
    let w = instance.weight(v);
    if w.is_zero() {
        None
    } else {
        Some(lambda / w)
    }
}

fn tighten(current: &mut Option<Scalar>, candidate: Scalar) {
    match current {
        Some(c) if *c <= candidate => {}
        _ => *current = Some(candidate),
    }
}

/// First forced placement of pass one: `(vertex, parent edge, slack)`.
fn first_pass(instance: &Instance, tree: &RootedTree, lambda: &Scalar) -> Option<(usize, usize, Scalar)> {
    let n = instance.vertex_count();
    let mut z: Vec<Option<Scalar>> = vec![None; n];
    for &u in tree.preorder().iter().rev() {
        let mut zu = cap(instance, u, lambda);
        for &c in tree.children(u) {
            if let Some(zc) = &z[c] {
                let e = tree.parent_edge(c).expect("child has a parent edge");
                tighten(&mut zu, zc - &instance.edge(e).length);
            }
        }
        if let (Some(e), Some(slack)) = (tree.parent_edge(u), &zu) {
            if *slack <= instance.edge(e).length {
                return Some((u, e, slack.clone()));
            }
        }
        z[u] = zu;
    }
    None
}

/// Places the second center on `T` minus the subtree of `a1`, rooted at `b1`.
fn second_pass(
    instance: &Instance,
    lambda: &Scalar,
    a1: usize,
    b1: usize,
    e1: usize,
    q1_from_b1: &Scalar,
) -> EdgePoint {
    let n = instance.vertex_count();
    // DFS from b1 avoiding a1: parent edge and distance to b1
    let mut order = Vec::new();
    let mut parent_edge: Vec<Option<usize>> = vec![None; n];
    let mut dist = vec![Scalar::zero(); n];
    let mut seen = vec![false; n];
    seen[b1] = true;
    seen[a1] = true;
    let mut stack = vec![b1];
    while let Some(x) = stack.pop() {
        order.push(x);
        for &e in instance.incident(x) {
            let y = instance.edge(e).other(x);
            if !seen[y] {
                seen[y] = true;
                parent_edge[y] = Some(e);
                dist[y] = &dist[x] + &instance.edge(e).length;
                stack.push(y);
            }
        }
    }

    let mut z: Vec<Option<Scalar>> = vec![None; n];
    for &u in order.iter().rev() {
        let mut zu = match cap(instance, u, lambda) {
            Some(c) if instance.weight(u) * &(&dist[u] + q1_from_b1) > *lambda => Some(c),
            _ => None,
        };
        for &e in instance.incident(u) {
            let c = instance.edge(e).other(u);
            if c != a1 && parent_edge[c] == Some(e) {
                if let Some(zc) = &z[c] {
                    tighten(&mut zu, zc - &instance.edge(e).length);
                }
            }
        }
        if let (Some(e), Some(slack)) = (parent_edge[u], &zu) {
            if *slack <= instance.edge(e).length {
                return point_from(instance, e, u, slack.clone());
            }
        }
        z[u] = zu;
    }
    // nothing forced: move from b1 toward q1 as far as b1's slack allows
    let s = match &z[b1] {
        Some(slack) if slack < q1_from_b1 => slack.clone(),
        _ => q1_from_b1.clone(),
    };
    point_from(instance, e1, b1, s)
}

/// Candidate centers from the greedy passes, before the final φ check.
pub(crate) fn greedy_centers(instance: &Instance, tree: &RootedTree, lambda: &Scalar) -> (EdgePoint, EdgePoint) {
    match first_pass(instance, tree, lambda) {
        None => {
            let q = instance.vertex_point(tree.root());
            (q.clone(), q)
        }
        Some((a1, e1, slack)) => {
            let b1 = instance.edge(e1).other(a1);
            let q1 = point_from(instance, e1, a1, slack.clone());
            let q1_from_b1 = &instance.edge(e1).length - &slack;
            let q2 = second_pass(instance, lambda, a1, b1, e1, &q1_from_b1);
            (q1, q2)
        }
    }
}

/// Witness centers with every φ_i ≤ `lambda`, or `None` when `lambda < λ*`.
/// Expects a fully paired tree.
pub fn feasibility_tree(instance: &Instance, lambda: &Scalar) -> Result<Option<(EdgePoint, EdgePoint)>, SolveError> {
    let tree = instance.rooted().ok_or(SolveError::NotTree)?;
    Ok(feasible_in(instance, tree, lambda))
}

pub(crate) fn feasible_in(instance: &Instance, tree: &RootedTree, lambda: &Scalar) -> Option<(EdgePoint, EdgePoint)> {
    if lambda.is_negative() {
        return None;
    }
    let (q1, q2) = greedy_centers(instance, tree, lambda);
    let ok = (0..instance.pair_count()).all(|i| instance.phi(i, &q1, &q2) <= *lambda);
    ok.then_some((q1, q2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::InstanceSpec;

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn unit_path() -> Instance {
        Instance::build(&InstanceSpec {
            weights: vec![Scalar::one(); 4],
            edges: (0..3).map(|i| (i, i + 1, Scalar::one())).collect(),
            pairs: vec![(0, 3), (1, 2)],
        })
        .unwrap()
    }

    #[test]
    fn unit_path_threshold() {
        let inst = unit_path();
        let (q1, q2) = feasibility_tree(&inst, &frac(1, 2)).unwrap().unwrap();
        assert!(inst.objective(&q1, &q2, None) <= frac(1, 2));
        assert_eq!(feasibility_tree(&inst, &frac(2, 5)).unwrap(), None);
    }

    #[test]
    fn one_center_value_suffices() {
        let inst = unit_path();
        assert!(feasibility_tree(&inst, &frac(3, 2)).unwrap().is_some());
        assert!(feasibility_tree(&inst, &Scalar::from_int(100)).unwrap().is_some());
    }

    #[test]
    fn rejects_cycles() {
        let inst = Instance::build(&InstanceSpec {
            weights: vec![Scalar::one(); 4],
            edges: (0..4).map(|i| (i, (i + 1) % 4, Scalar::one())).collect(),
            pairs: vec![(0, 2), (1, 3)],
        })
        .unwrap();
        assert_eq!(feasibility_tree(&inst, &Scalar::one()), Err(SolveError::NotTree));
    }
}
