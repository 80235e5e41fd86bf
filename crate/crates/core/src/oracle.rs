//! Brute-force references. Slow and exact; every solver is checked against
//! them on small instances.
//!
//! The optimum has both centers at points where two distance-function lines of
//! paired vertices cross on an edge, or at edge endpoints. [`oracle_solve`]
//! enumerates all such points and tries every pair of them.
//! [`oracle_by_assignment`] instead enumerates the `2^k` ways to split the
//! pairs and solves two independent one-center problems per split.

use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::model::{EdgePoint, Instance};
use crate::piercing::{BoundingBox, RectangleSet};
use crate::scalar::Scalar;

/// Default limit on the vertex count accepted by the oracles.
pub const DEFAULT_ORACLE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("instance has {n} vertices, oracle cap is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("instance has {k} pairs, assignment enumeration allows at most {cap}")]
    TooManyPairs { k: usize, cap: usize },
}

/// An optimal value with one placement attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOptimum {
    pub lambda: Scalar,
    pub q1: EdgePoint,
    pub q2: EdgePoint,
}

fn guard(instance: &Instance, cap: usize) -> Result<(), OracleError> {
    let n = instance.vertex_count();
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    Ok(())
}

/// Lines `w·d(v, ·)` of the given vertices on edge `e`, extended past the
/// semicircular point.
fn lines_on_edge(instance: &Instance, e: usize, vertices: &[usize]) -> Vec<(Scalar, Scalar)> {
    let edge = instance.edge(e);
    let mut lines = Vec::new();
    for &x in vertices {
        let w = instance.weight(x);
        if w.is_zero() {
            continue;
        }
        let a = instance.dist(x, edge.u);
        let b = instance.dist(x, edge.v);
        lines.push((w.clone(), w * &a));
        lines.push((-w, w * &(&b + &edge.length)));
    }
    lines
}

/// Edge endpoints and every crossing of two lines inside the edge, over all
/// edges, with vertex points listed once.
fn candidate_points(instance: &Instance, vertices: &[usize]) -> Vec<EdgePoint> {
    let mut points: Vec<EdgePoint> = (0..instance.vertex_count())
        .filter(|&v| !instance.incident(v).is_empty())
        .map(|v| instance.vertex_point(v))
        .collect();
    for e in 0..instance.edge_count() {
        let length = &instance.edge(e).length;
        let lines = lines_on_edge(instance, e, vertices);
        let mut ts = Vec::new();
        for (i, (s1, c1)) in lines.iter().enumerate() {
            for (s2, c2) in &lines[i + 1..] {
                let ds = s1 - s2;
                if ds.is_zero() {
                    continue;
                }
                let t = &(c2 - c1) / &ds;
                if t.is_positive() && t < *length {
                    ts.push(t);
                }
            }
        }
        ts.sort();
        ts.dedup();
        points.extend(ts.into_iter().map(|t| EdgePoint { edge: e, t }));
    }
    points
}

fn paired_vertices(instance: &Instance) -> Vec<usize> {
    let mut out: Vec<usize> = instance.pairs().iter().flat_map(|p| [p.v, p.u]).collect();
    out.sort_unstable();
    out
}

/// Weighted distances of both members of every pair from each point, replaced
/// by their rank among all such values. Layout: `[p][2i]` for `v`, `[p][2i+1]` for `u`.
fn ranked_distances(instance: &Instance, points: &[EdgePoint]) -> (Vec<Vec<u32>>, Vec<Scalar>) {
    let raw: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| instance.pairs().iter().flat_map(|pair| [pair.v, pair.u]).map(|x| instance.weighted_distance(x, p)).collect())
        .collect();
    let mut values: Vec<Scalar> = raw.iter().flatten().cloned().collect();
    values.push(Scalar::zero());
    values.sort();
    values.dedup();
    let ranked = raw
        .iter()
        .map(|row| row.iter().map(|x| values.binary_search(x).expect("value present") as u32).collect())
        .collect();
    (ranked, values)
}

/// The objective of `(a, b)` in ranks, or `None` once it reaches `bound`.
fn ranked_objective(a: &[u32], b: &[u32], bound: u32) -> Option<u32> {
    let mut worst = 0;
    for i in 0..a.len() / 2 {
        let forward = a[2 * i].max(b[2 * i + 1]);
        let reverse = a[2 * i + 1].max(b[2 * i]);
        let cost = forward.min(reverse);
        if cost >= bound {
            return None;
        }
        worst = worst.max(cost);
    }
    Some(worst)
}

/// Best placement with `q1` among points accepted by `first` and `q2` among
/// points accepted by `second`. `None` when either region has no candidate.
pub fn oracle_solve_within<F, G>(
    instance: &Instance,
    cap: usize,
    first: F,
    second: G,
) -> Result<Option<OracleOptimum>, OracleError>
where
    F: Fn(&EdgePoint) -> bool,
    G: Fn(&EdgePoint) -> bool,
{
    guard(instance, cap)?;
    if instance.edge_count() == 0 {
        return Ok(None);
    }
    let points = candidate_points(instance, &paired_vertices(instance));
    let (ranked, values) = ranked_distances(instance, &points);
    let left: Vec<usize> = (0..points.len()).filter(|&p| first(&points[p])).collect();
    let right: Vec<usize> = (0..points.len()).filter(|&p| second(&points[p])).collect();
    let mut best: Option<(u32, usize, usize)> = None;
    for &p in &left {
        for &q in &right {
            let bound = best.map_or(u32::MAX, |b| b.0);
            if let Some(cost) = ranked_objective(&ranked[p], &ranked[q], bound) {
                best = Some((cost, p, q));
                if cost == 0 {
                    break;
                }
            }
        }
    }
    Ok(best.map(|(cost, p, q)| OracleOptimum {
        lambda: values[cost as usize].clone(),
        q1: points[p].clone(),
        q2: points[q].clone(),
    }))
}

/// Optimal value with a placement attaining it.
pub fn oracle_optimum(instance: &Instance, cap: usize) -> Result<OracleOptimum, OracleError> {
    if instance.edge_count() == 0 {
        guard(instance, cap)?;
        // a single vertex: both centers on it, every distance is zero
        return Ok(OracleOptimum {
            lambda: Scalar::zero(),
            q1: EdgePoint { edge: 0, t: Scalar::zero() },
            q2: EdgePoint { edge: 0, t: Scalar::zero() },
        });
    }
    let best = oracle_solve_within(instance, cap, |_| true, |_| true)?;
    Ok(best.expect("a graph with an edge has candidate points"))
}

/// The optimal value λ*.
pub fn oracle_solve(instance: &Instance, cap: usize) -> Result<Scalar, OracleError> {
    oracle_optimum(instance, cap).map(|o| o.lambda)
}

/// `λ ≥ λ*`, computing λ* once per instance.
#[derive(Debug)]
pub struct Oracle<'a> {
    instance: &'a Instance,
    cap: usize,
    optimum: OnceCell<Result<Scalar, OracleError>>,
}

impl<'a> Oracle<'a> {
    pub fn new(instance: &'a Instance, cap: usize) -> Self {
        Oracle { instance, cap, optimum: OnceCell::new() }
    }

    pub fn optimum(&self) -> Result<&Scalar, OracleError> {
        self.optimum.get_or_init(|| oracle_solve(self.instance, self.cap)).as_ref().map_err(Clone::clone)
    }

    pub fn feasible(&self, lambda: &Scalar) -> Result<bool, OracleError> {
        Ok(self.optimum()? <= lambda)
    }
}

/// One-off form of [`Oracle::feasible`].
pub fn oracle_feasible(instance: &Instance, lambda: &Scalar, cap: usize) -> Result<bool, OracleError> {
    Oracle::new(instance, cap).feasible(lambda)
}

/// Smallest max weighted distance from one point to all of `vertices`, over
/// the candidate points of those vertices alone.
fn one_center(instance: &Instance, vertices: &[usize]) -> Scalar {
    if vertices.is_empty() {
        return Scalar::zero();
    }
    candidate_points(instance, vertices)
        .iter()
        .map(|p| vertices.iter().map(|&x| instance.weighted_distance(x, p)).max().expect("nonempty"))
        .min()
        .expect("at least one candidate point")
}

/// Largest pair count [`oracle_by_assignment`] accepts.
pub const ASSIGNMENT_PAIR_CAP: usize = 12;

/// λ* as the best of all `2^k` splits, each costing the larger of its two
/// one-center values.
pub fn oracle_by_assignment(instance: &Instance, cap: usize) -> Result<Scalar, OracleError> {
    guard(instance, cap)?;
    let k = instance.pair_count();
    if k > ASSIGNMENT_PAIR_CAP {
        return Err(OracleError::TooManyPairs { k, cap: ASSIGNMENT_PAIR_CAP });
    }
    if instance.edge_count() == 0 {
        return Ok(Scalar::zero());
    }
    let mut best: Option<Scalar> = None;
    for mask in 0u32..(1 << k) {
        let mut first = Vec::with_capacity(k);
        let mut second = Vec::with_capacity(k);
        for (i, p) in instance.pairs().iter().enumerate() {
            if mask >> i & 1 == 0 {
                first.push(p.v);
                second.push(p.u);
            } else {
                first.push(p.u);
                second.push(p.v);
            }
        }
        let a = one_center(instance, &first);
        let b = one_center(instance, &second);
        let cost = if a > b { a } else { b };
        if best.as_ref().is_none_or(|x| cost < *x) {
            best = Some(cost);
        }
    }
    Ok(best.expect("at least one split"))
}

/// Lexicographically smallest point of the box hitting every set, trying all
/// combinations of rectangle and box coordinates.
pub fn oracle_pierce(bbox: &BoundingBox, sets: &[RectangleSet]) -> Option<(Scalar, Scalar)> {
    let mut xs = vec![Scalar::zero(), bbox.width.clone()];
    let mut ys = vec![Scalar::zero(), bbox.height.clone()];
    for r in sets.iter().flat_map(|s| &s.rectangles) {
        xs.extend([r.x_lo.clone(), r.x_hi.clone()]);
        ys.extend([r.y_lo.clone(), r.y_hi.clone()]);
    }
    for v in [&mut xs, &mut ys] {
        v.sort();
        v.dedup();
    }
    for x in &xs {
        for y in &ys {
            if sets.iter().all(|s| s.is_hit(x, y)) {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}
