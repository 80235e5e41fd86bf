//! Which hanging subtrees of a query point hold the optimal centers.
//!
//! Removing a point `u` splits the tree into subtrees `T_1, …, T_s`, and
//! `τ_i = max_{v ∈ T_i} w(v)·d(v, u)`. With the τ sorted in descending order
//! (missing ones read as 0), the relation between `τ_1`, `τ_2` and `τ_3` fixes
//! either the optimum itself or the subtrees the centers can be searched in,
//! at the cost of at most one feasibility test.

use alloc::vec;
use alloc::vec::Vec;

use crate::model::{EdgePoint, Instance};
use crate::scalar::Scalar;
use crate::solve::SolveError;
use crate::tree::feasibility::feasibility_tree;

/// One split subtree, identified by its vertex adjacent to the query point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HangingSubtree {
    pub entry: usize,
    pub tau: Scalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauCase {
    /// τ₁ = τ₂ = τ₃
    AllTied,
    /// τ₁ = τ₂ > τ₃
    TopTied,
    /// τ₁ > τ₂ = τ₃
    LowerTied,
    /// τ₁ > τ₂ > τ₃
    Distinct,
}

/// Indices refer to [`HangingSubtreeReport::subtrees`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Designation {
    /// The optimum is this value.
    Verdict(Scalar),
    /// Some optimal placement has one center in each hanging subtree.
    Split(usize, usize),
    /// Some optimal placement has both centers in this hanging subtree.
    Together(usize),
}

#[derive(Clone, Debug)]
pub struct HangingSubtreeReport {
    pub query: EdgePoint,
    /// Sorted by τ descending, ties by entry vertex.
    pub subtrees: Vec<HangingSubtree>,
    pub case: TauCase,
    pub designation: Designation,
    /// A value known to be feasible: τ₁, or τ₂ when the test at τ₂ succeeded.
    pub upper_bound: Scalar,
    query_vertex: Option<usize>,
    // subtree index per vertex; `usize::MAX` for the query vertex
    branch: Vec<usize>,
}

impl HangingSubtreeReport {
    /// Index of the split subtree containing vertex `v`, `None` for the query vertex.
    pub fn subtree_of(&self, v: usize) -> Option<usize> {
        let b = self.branch[v];
        (b != usize::MAX).then_some(b)
    }

    /// Whether point `p` lies in hanging subtree `i` (the split subtree plus
    /// the query point and the stretch joining them).
    pub fn hangs_in(&self, instance: &Instance, i: usize, p: &EdgePoint) -> bool {
        if instance.same_point(p, &self.query) {
            return true;
        }
        if let Some(x) = instance.point_vertex(p) {
            return self.subtree_of(x) == Some(i);
        }
        let edge = instance.edge(p.edge);
        if self.query_vertex.is_none() && p.edge == self.query.edge {
            let side = if p.t < self.query.t { edge.u } else { edge.v };
            return self.subtree_of(side) == Some(i);
        }
        // interior point: the endpoint that is not the query vertex decides
        let x = if Some(edge.u) == self.query_vertex { edge.v } else { edge.u };
        self.subtree_of(x) == Some(i)
    }
}

/// Distances from the query and the subtree label of every vertex.
pub(crate) struct Sweep {
    pub(crate) dist: Vec<Scalar>,
    pub(crate) branch: Vec<usize>,
    pub(crate) entries: Vec<usize>,
}

pub(crate) fn sweep(instance: &Instance, query: &EdgePoint, query_vertex: Option<usize>) -> Sweep {
    let n = instance.vertex_count();
    let mut dist = vec![Scalar::zero(); n];
    let mut branch = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    let mut entries = Vec::new();
    match query_vertex {
        Some(u) => {
            seen[u] = true;
            let mut nbrs: Vec<(usize, usize)> =
                instance.incident(u).iter().map(|&e| (instance.edge(e).other(u), e)).collect();
            nbrs.sort_unstable();
            for (y, e) in nbrs {
                seen[y] = true;
                dist[y] = instance.edge(e).length.clone();
                branch[y] = entries.len();
                entries.push(y);
                stack.push(y);
            }
        }
        None => {
            let edge = instance.edge(query.edge);
            for (y, d) in [(edge.u, query.t.clone()), (edge.v, &edge.length - &query.t)] {
                seen[y] = true;
                dist[y] = d;
                branch[y] = entries.len();
                entries.push(y);
                stack.push(y);
            }
        }
    }
    while let Some(x) = stack.pop() {
        for &e in instance.incident(x) {
            if query_vertex.is_none() && e == query.edge {
                continue;
            }
            let y = instance.edge(e).other(x);
            if !seen[y] {
                seen[y] = true;
                dist[y] = &dist[x] + &instance.edge(e).length;
                branch[y] = branch[x];
                stack.push(y);
            }
        }
    }
    Sweep { dist, branch, entries }
}

/// Splits the tree at `query` and designates where the centers lie. Expects a
/// fully paired tree.
pub fn locate_center_subtrees(instance: &Instance, query: &EdgePoint) -> Result<HangingSubtreeReport, SolveError> {
    if !instance.is_tree() {
        return Err(SolveError::NotTree);
    }
    let query_vertex = instance.point_vertex(query);
    let Sweep { dist, branch, entries } = sweep(instance, query, query_vertex);

    let weighted: Vec<Scalar> = (0..instance.vertex_count())
        .map(|v| if branch[v] == usize::MAX { Scalar::zero() } else { instance.weight(v) * &dist[v] })
        .collect();
    let mut tau = vec![Scalar::zero(); entries.len()];
    for v in 0..instance.vertex_count() {
        if branch[v] != usize::MAX && weighted[v] > tau[branch[v]] {
            tau[branch[v]] = weighted[v].clone();
        }
    }
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&a, &b| tau[b].cmp(&tau[a]).then(entries[a].cmp(&entries[b])));
    let mut rank = vec![0usize; entries.len()];
    for (r, &b) in order.iter().enumerate() {
        rank[b] = r;
    }
    let subtrees: Vec<HangingSubtree> =
        order.iter().map(|&b| HangingSubtree { entry: entries[b], tau: tau[b].clone() }).collect();
    let branch: Vec<usize> = branch.iter().map(|&b| if b == usize::MAX { b } else { rank[b] }).collect();

    let zero = Scalar::zero();
    let t = |i: usize| subtrees.get(i).map_or(&zero, |s| &s.tau);
    let (t1, t2, t3) = (t(0).clone(), t(1).clone(), t(2).clone());

    // a pair inside subtree `i` with both members at weighted distance τ_i
    let tied_pair = |i: usize| {
        instance.pairs().iter().any(|p| {
            branch[p.v] == i && branch[p.u] == i && weighted[p.v] == *t(i) && weighted[p.u] == *t(i)
        })
    };

    let mut upper_bound = t1.clone();
    let (case, designation) = if t1 == t3 {
        (TauCase::AllTied, Designation::Verdict(t1.clone()))
    } else if t1 == t2 {
        let d = if tied_pair(0) || tied_pair(1) { Designation::Verdict(t1.clone()) } else { Designation::Split(0, 1) };
        (TauCase::TopTied, d)
    } else {
        let case = if t2 == t3 { TauCase::LowerTied } else { TauCase::Distinct };
        let d = if tied_pair(0) || tied_pair(1) {
            Designation::Together(0)
        } else if feasibility_tree(instance, &t2)?.is_some() {
            upper_bound = t2.clone();
            if t2 == t3 {
                Designation::Verdict(t2.clone())
            } else {
                Designation::Split(0, 1)
            }
        } else {
            Designation::Together(0)
        };
        (case, d)
    };

    Ok(HangingSubtreeReport {
        query: query.clone(),
        subtrees,
        case,
        designation,
        upper_bound,
        query_vertex,
        branch,
    })
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
    fn vertex_one_of_unit_path() {
        let inst = unit_path();
        let r = locate_center_subtrees(&inst, &inst.vertex_point(1)).unwrap();
        assert_eq!(r.subtrees[0], HangingSubtree { entry: 2, tau: Scalar::from_int(2) });
        assert_eq!(r.subtrees[1], HangingSubtree { entry: 0, tau: Scalar::one() });
        assert_eq!(r.case, TauCase::Distinct);
        // the test at τ₂ = 1 succeeds but λ* < 1, so the centers split
        assert_eq!(r.designation, Designation::Split(0, 1));
        assert_eq!(r.upper_bound, Scalar::one());
        assert!(r.hangs_in(&inst, 0, &EdgePoint { edge: 2, t: frac(1, 2) }));
        assert!(r.hangs_in(&inst, 1, &EdgePoint { edge: 0, t: frac(1, 2) }));
    }

    #[test]
    fn midpoint_of_unit_path() {
        let inst = unit_path();
        let q = EdgePoint { edge: 1, t: frac(1, 2) };
        let r = locate_center_subtrees(&inst, &q).unwrap();
        assert_eq!(r.subtrees.len(), 2);
        assert!(r.subtrees.iter().all(|s| s.tau == frac(3, 2)));
        assert_eq!(r.case, TauCase::TopTied);
        assert_eq!(r.designation, Designation::Split(0, 1));
        assert!(r.hangs_in(&inst, 0, &EdgePoint { edge: 1, t: frac(1, 4) }));
        assert!(!r.hangs_in(&inst, 0, &EdgePoint { edge: 1, t: frac(3, 4) }));
    }

    #[test]
    fn symmetric_star_resolves_outright() {
        // hub 0, arms of length 2 to leaves 1..=4
        let inst = Instance::build(&InstanceSpec {
            weights: vec![Scalar::one(); 5],
            edges: (1..=4).map(|i| (0, i, Scalar::from_int(2))).collect(),
            pairs: vec![(1, 3), (2, 4)],
        })
        .unwrap();
        let r = locate_center_subtrees(&inst, &inst.vertex_point(0)).unwrap();
        assert_eq!(r.case, TauCase::AllTied);
        assert_eq!(r.designation, Designation::Verdict(Scalar::from_int(2)));
    }
}
