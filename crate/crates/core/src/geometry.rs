//! Weighted distance functions restricted to one edge, feasible intervals, and
//! the candidate values that must contain the optimum.

use alloc::vec;
use alloc::vec::Vec;

use crate::model::Instance;
use crate::scalar::Scalar;

/// `y = slope · t + intercept`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub slope: Scalar,
    pub intercept: Scalar,
}

impl Line {
    pub fn at(&self, t: &Scalar) -> Scalar {
        &(&self.slope * t) + &self.intercept
    }

    /// Intersection point `(t, y)`; `None` for parallel lines.
    pub fn intersect(&self, other: &Line) -> Option<(Scalar, Scalar)> {
        let ds = &self.slope - &other.slope;
        if ds.is_zero() {
            return None;
        }
        let t = &(&other.intercept - &self.intercept) / &ds;
        let y = self.at(&t);
        Some((t, y))
    }
}

/// A linear piece on `[t_lo, t_hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub line: Line,
    pub t_lo: Scalar,
    pub t_hi: Scalar,
}

/// `t ↦ w(v) · d(v, x(t))` for `x(t)` on one edge, as one or two linear pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDistanceFunction {
    pub vertex: usize,
    pub edge: usize,
    pub pieces: Vec<Piece>,
    /// The semicircular point, when strictly inside the edge.
    pub breakpoint: Option<Scalar>,
}

impl EdgeDistanceFunction {
    pub fn value(&self, t: &Scalar) -> Scalar {
        let piece = self
            .pieces
            .iter()
            .find(|p| *t <= p.t_hi)
            .unwrap_or_else(|| self.pieces.last().expect("at least one piece"));
        piece.line.at(t)
    }

    /// Values at the piece endpoints (edge ends and the breakpoint).
    pub fn endpoint_values(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(3);
        for p in &self.pieces {
            out.push(p.line.at(&p.t_lo));
        }
        if let Some(p) = self.pieces.last() {
            out.push(p.line.at(&p.t_hi));
        }
        out
    }
}

/// The distance function of vertex `v` on edge `e`.
pub fn distance_function(instance: &Instance, v: usize, e: usize) -> EdgeDistanceFunction {
    let edge = instance.edge(e);
    let w = instance.weight(v);
    let a = instance.dist(v, edge.u);
    let b = instance.dist(v, edge.v);
    let l = &edge.length;
    let rising = Line { slope: w.clone(), intercept: w * &a };
    let falling = Line { slope: -w, intercept: w * &(&b + l) };
    let peak = &(&(&b + l) - &a) / &Scalar::from_int(2);
    let zero = Scalar::zero();
    let (pieces, breakpoint) = if !peak.is_positive() {
        (vec![Piece { line: falling, t_lo: zero, t_hi: l.clone() }], None)
    } else if peak >= *l {
        (vec![Piece { line: rising, t_lo: zero, t_hi: l.clone() }], None)
    } else {
        let pieces = vec![
            Piece { line: rising, t_lo: zero, t_hi: peak.clone() },
            Piece { line: falling, t_lo: peak.clone(), t_hi: l.clone() },
        ];
        (pieces, Some(peak))
    };
    EdgeDistanceFunction { vertex: v, edge: e, pieces, breakpoint }
}

/// A closed interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Scalar,
    pub hi: Scalar,
}

impl Interval {
    pub fn contains(&self, t: &Scalar) -> bool {
        self.lo <= *t && *t <= self.hi
    }
}

/// Solution set of `w(v)·d(v, x) ≤ λ` on an edge: `i1` touches the lower
/// endpoint, `i2` the upper one. A whole edge is always reported as `i1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FeasibleIntervals {
    pub i1: Option<Interval>,
    pub i2: Option<Interval>,
}

impl FeasibleIntervals {
    pub fn is_empty(&self) -> bool {
        self.i1.is_none() && self.i2.is_none()
    }

    pub fn contains(&self, t: &Scalar) -> bool {
        self.intervals().any(|i| i.contains(t))
    }

    pub fn intervals(&self) -> impl Iterator<Item = &Interval> {
        self.i1.iter().chain(self.i2.iter())
    }

    fn whole(length: &Scalar) -> Self {
        FeasibleIntervals { i1: Some(Interval { lo: Scalar::zero(), hi: length.clone() }), i2: None }
    }
}

/// Feasible intervals of `v` on `e` under `lambda`.
pub fn feasible_intervals(instance: &Instance, v: usize, e: usize, lambda: &Scalar) -> FeasibleIntervals {
    let edge = instance.edge(e);
    let w = instance.weight(v);
    if w.is_zero() {
        return FeasibleIntervals::whole(&edge.length);
    }
    let reach = lambda / w;
    intervals_from_reach(&reach, &instance.dist(v, edge.u), &instance.dist(v, edge.v), &edge.length)
}

/// Solves `min(a + t, b + l − t) ≤ reach` over `t ∈ [0, l]`.
pub(crate) fn intervals_from_reach(reach: &Scalar, a: &Scalar, b: &Scalar, l: &Scalar) -> FeasibleIntervals {
    let hi = reach - a;
    let lo = &(b + l) - reach;
    let i1 = if hi.is_negative() { None } else { Some(hi) };
    let i2 = if lo > *l { None } else { Some(lo) };
    match (i1, i2) {
        (Some(h), Some(lo)) if h >= lo || h >= *l || !lo.is_positive() => FeasibleIntervals::whole(l),
        (Some(h), None) if h >= *l => FeasibleIntervals::whole(l),
        (None, Some(lo)) if !lo.is_positive() => FeasibleIntervals::whole(l),
        (i1, i2) => FeasibleIntervals {
            i1: i1.map(|h| Interval { lo: Scalar::zero(), hi: h }),
            i2: i2.map(|lo| Interval { lo, hi: l.clone() }),
        },
    }
}

/// Lines of the positive-weight distance functions on `e`, plus every piece
/// endpoint value.
fn edge_family(instance: &Instance, e: usize) -> (Vec<Line>, Vec<Scalar>) {
    let mut lines = Vec::new();
    let mut values = Vec::new();
    for v in 0..instance.vertex_count() {
        if instance.weight(v).is_zero() {
            continue;
        }
        let f = distance_function(instance, v, e);
        values.extend(f.endpoint_values());
        for p in f.pieces {
            lines.push(p.line);
        }
    }
    (lines, values)
}

/// Intersection values inside the edge plus endpoint values, unsorted.
fn edge_candidates(instance: &Instance, e: usize, out: &mut Vec<Scalar>) {
    let length = &instance.edge(e).length;
    let (mut lines, values) = edge_family(instance, e);
    out.extend(values);
    lines.sort_by(|x, y| x.slope.cmp(&y.slope).then_with(|| x.intercept.cmp(&y.intercept)));
    lines.dedup();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if let Some((t, y)) = a.intersect(b) {
                if !t.is_negative() && t <= *length && !y.is_negative() {
                    out.push(y);
                }
            }
        }
    }
}

fn finish(mut values: Vec<Scalar>) -> Vec<Scalar> {
    values.push(Scalar::zero());
    values.sort();
    values.dedup();
    values
}

/// Every intersection value of distance-function lines on a common edge, over
/// all edges, together with all piece endpoint values and 0. Sorted, unique.
pub fn candidate_values_graph(instance: &Instance) -> Vec<Scalar> {
    let mut out = Vec::new();
    for e in 0..instance.edge_count() {
        edge_candidates(instance, e, &mut out);
    }
    finish(out)
}

/// The same construction restricted to the families on `e1` and `e2`.
pub fn candidate_values_edge_pair(instance: &Instance, e1: usize, e2: usize) -> Vec<Scalar> {
    let mut out = Vec::new();
    edge_candidates(instance, e1, &mut out);
    if e2 != e1 {
        edge_candidates(instance, e2, &mut out);
    }
    finish(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{EdgePoint, InstanceSpec};

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn unit_path(weights: &[i64]) -> Instance {
        let n = weights.len();
        Instance::build(&InstanceSpec {
            weights: weights.iter().map(|&w| int(w)).collect(),
            edges: (0..n - 1).map(|i| (i, i + 1, int(1))).collect(),
            pairs: vec![(0, 3), (1, 2)],
        })
        .unwrap()
    }

    fn unit_triangle() -> Instance {
        Instance::build(&InstanceSpec {
            weights: vec![int(1); 3],
            edges: vec![(0, 1, int(1)), (1, 2, int(1)), (0, 2, int(1))],
            pairs: vec![],
        })
        .unwrap()
    }

    #[test]
    fn triangle_apex_peaks_mid_edge() {
        let inst = unit_triangle();
        let f = distance_function(&inst, 2, 0);
        assert_eq!(f.breakpoint, Some(frac(1, 2)));
        assert_eq!(f.pieces.len(), 2);
        assert_eq!(f.value(&frac(1, 2)), frac(3, 2));
        assert_eq!(f.value(&int(0)), int(1));
    }

    #[test]
    fn endpoint_vertex_has_single_rising_piece() {
        let inst = unit_path(&[3, 1, 1, 1]);
        let f = distance_function(&inst, 0, 0);
        assert_eq!(f.breakpoint, None);
        assert_eq!(f.pieces, vec![Piece { line: Line { slope: int(3), intercept: int(0) }, t_lo: int(0), t_hi: int(1) }]);
        let far = distance_function(&inst, 0, 2);
        assert_eq!(far.pieces.len(), 1);
        assert_eq!(far.pieces[0].line, Line { slope: int(3), intercept: int(6) });
        assert_eq!(far.value(&frac(1, 2)), frac(15, 2));
        // approached from the upper endpoint: a single falling piece
        let back = distance_function(&inst, 3, 0);
        assert_eq!(back.pieces[0].line, Line { slope: int(-1), intercept: int(3) });
    }

    #[test]
    fn feasible_interval_examples() {
        let weighted = unit_path(&[2, 1, 1, 1]);
        let fi = feasible_intervals(&weighted, 0, 0, &frac(1, 2));
        assert_eq!(fi, FeasibleIntervals { i1: Some(Interval { lo: int(0), hi: frac(1, 4) }), i2: None });

        let fi = feasible_intervals(&weighted, 0, 2, &int(0));
        assert!(fi.is_empty());

        let tri = unit_triangle();
        let fi = feasible_intervals(&tri, 2, 0, &frac(5, 4));
        assert_eq!(fi.i1, Some(Interval { lo: int(0), hi: frac(1, 4) }));
        assert_eq!(fi.i2, Some(Interval { lo: frac(3, 4), hi: int(1) }));

        let fi = feasible_intervals(&tri, 2, 0, &frac(3, 2));
        assert_eq!(fi, FeasibleIntervals::whole(&int(1)));
    }

    #[test]
    fn zero_weight_gets_whole_edge() {
        let inst = unit_path(&[0, 1, 1, 1]);
        assert_eq!(feasible_intervals(&inst, 0, 2, &int(0)), FeasibleIntervals::whole(&int(1)));
    }

    #[test]
    fn values_match_point_distance() {
        let inst = unit_triangle();
        for v in 0..3 {
            for e in 0..3 {
                let f = distance_function(&inst, v, e);
                for k in 0..=8 {
                    let t = frac(k, 8);
                    let expected = inst.weighted_distance(v, &EdgePoint { edge: e, t: t.clone() });
                    assert_eq!(f.value(&t), expected);
                }
            }
        }
    }

    #[test]
    fn candidate_examples() {
        let inst = unit_path(&[1, 1, 1, 1]);
        let all = candidate_values_graph(&inst);
        assert!(all.contains(&frac(1, 2)));
        assert!(all.contains(&frac(3, 2)));
        assert!(all.windows(2).all(|w| w[0] < w[1]));

        let pair = candidate_values_edge_pair(&inst, 0, 2);
        assert!(pair.contains(&frac(1, 2)));
        let single = candidate_values_edge_pair(&inst, 1, 1);
        let mut slice = Vec::new();
        edge_candidates(&inst, 1, &mut slice);
        assert_eq!(single, finish(slice));
    }
}
