//! Piercing families of corner-anchored rectangles by a left-to-right sweep.
//!
//! Each family (one per pair) is hit by a point if the point lies in at least
//! one of its closed rectangles. On a vertical sweep line the part of a family
//! *not* covered is one open-ended segment; a leaf count η per y-key records
//! how many families leave that key uncovered, so a zero minimum means the
//! current sweep line holds a point hitting every family.

use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::{feasible_intervals, FeasibleIntervals, Interval};
use crate::lazy_min::LazyMinTree;
use crate::model::Instance;
use crate::scalar::Scalar;

/// The box `[0, width] × [0, height]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundingBox {
    pub width: Scalar,
    pub height: Scalar,
}

/// A closed axis-parallel rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerRectangle {
    pub x_lo: Scalar,
    pub x_hi: Scalar,
    pub y_lo: Scalar,
    pub y_hi: Scalar,
}

impl CornerRectangle {
    pub fn from_intervals(x: &Interval, y: &Interval) -> Self {
        CornerRectangle { x_lo: x.lo.clone(), x_hi: x.hi.clone(), y_lo: y.lo.clone(), y_hi: y.hi.clone() }
    }

    pub fn contains(&self, x: &Scalar, y: &Scalar) -> bool {
        self.x_lo <= *x && *x <= self.x_hi && self.y_lo <= *y && *y <= self.y_hi
    }

    fn disjoint(&self, other: &CornerRectangle) -> bool {
        self.x_hi < other.x_lo || other.x_hi < self.x_lo || self.y_hi < other.y_lo || other.y_hi < self.y_lo
    }
}

/// The rectangles encoding pair `index` on one edge pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleSet {
    pub index: usize,
    pub rectangles: Vec<CornerRectangle>,
}

impl RectangleSet {
    pub fn is_hit(&self, x: &Scalar, y: &Scalar) -> bool {
        self.rectangles.iter().any(|r| r.contains(x, y))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PierceError {
    #[error("box must have positive width and height")]
    DegenerateBox,
    #[error("set {set} has no rectangles")]
    EmptySet { set: usize },
    #[error("rectangle {rectangle} of set {set} is inverted or leaves the box")]
    OutOfBox { set: usize, rectangle: usize },
    #[error("rectangle {rectangle} of set {set} shares no corner with the box")]
    NotCornerAnchored { set: usize, rectangle: usize },
}

/// Cross products of feasible intervals for both ways of splitting a pair:
/// `first_on_e1 × second_on_e2` and `second_on_e1 × first_on_e2`. `None` when
/// neither orientation leaves anything, i.e. the pair cannot be served.
pub fn rectangle_set_from_intervals(
    index: usize,
    first_on_e1: &FeasibleIntervals,
    second_on_e2: &FeasibleIntervals,
    second_on_e1: &FeasibleIntervals,
    first_on_e2: &FeasibleIntervals,
) -> Option<RectangleSet> {
    let mut rectangles = Vec::new();
    for (xs, ys) in [(first_on_e1, second_on_e2), (second_on_e1, first_on_e2)] {
        let start = rectangles.len();
        for x in xs.intervals() {
            for y in ys.intervals() {
                rectangles.push(CornerRectangle::from_intervals(x, y));
            }
        }
        debug_assert!(rectangles[start..]
            .iter()
            .enumerate()
            .all(|(i, a)| rectangles[start + i + 1..].iter().all(|b| a.disjoint(b))));
    }
    if rectangles.is_empty() {
        None
    } else {
        Some(RectangleSet { index, rectangles })
    }
}

/// The set for pair `i` on `(e1, e2)` under `lambda`: `x` runs along `e1`,
/// `y` along `e2`.
pub fn build_rectangle_set(instance: &Instance, i: usize, e1: usize, e2: usize, lambda: &Scalar) -> Option<RectangleSet> {
    let pair = instance.pair(i);
    rectangle_set_from_intervals(
        i,
        &feasible_intervals(instance, pair.v, e1, lambda),
        &feasible_intervals(instance, pair.u, e2, lambda),
        &feasible_intervals(instance, pair.u, e1, lambda),
        &feasible_intervals(instance, pair.v, e2, lambda),
    )
}

/// Whether `(x, y)` hits every set.
pub fn hits_all(sets: &[RectangleSet], x: &Scalar, y: &Scalar) -> bool {
    sets.iter().all(|s| s.is_hit(x, y))
}

fn validate(bbox: &BoundingBox, sets: &[RectangleSet]) -> Result<(), PierceError> {
    if !bbox.width.is_positive() || !bbox.height.is_positive() {
        return Err(PierceError::DegenerateBox);
    }
    let zero = Scalar::zero();
    for (set, s) in sets.iter().enumerate() {
        if s.rectangles.is_empty() {
            return Err(PierceError::EmptySet { set });
        }
        for (rectangle, r) in s.rectangles.iter().enumerate() {
            if r.x_lo.is_negative()
                || r.y_lo.is_negative()
                || r.x_lo > r.x_hi
                || r.y_lo > r.y_hi
                || r.x_hi > bbox.width
                || r.y_hi > bbox.height
            {
                return Err(PierceError::OutOfBox { set, rectangle });
            }
            let x_anchored = r.x_lo == zero || r.x_hi == bbox.width;
            let y_anchored = r.y_lo == zero || r.y_hi == bbox.height;
            if !x_anchored || !y_anchored {
                return Err(PierceError::NotCornerAnchored { set, rectangle });
            }
        }
    }
    Ok(())
}

/// Rectangle with coordinates replaced by indices into the event and key lists.
struct Indexed {
    x_lo: usize,
    x_hi: usize,
    y_lo: usize,
    y_hi: usize,
}

fn sorted_unique(mut v: Vec<Scalar>) -> Vec<Scalar> {
    v.sort();
    v.dedup();
    v
}

fn position(sorted: &[Scalar], x: &Scalar) -> usize {
    sorted.binary_search(x).expect("coordinate was inserted")
}

/// Finds a point of the closed box hitting every set, or `None`. The returned
/// coordinates are rectangle side coordinates or box sides; among hits on the
/// leftmost successful sweep line the lowest key is chosen. No sets: `(0, 0)`.
pub fn pierce(bbox: &BoundingBox, sets: &[RectangleSet]) -> Result<Option<(Scalar, Scalar)>, PierceError> {
    validate(bbox, sets)?;
    if sets.is_empty() {
        return Ok(Some((Scalar::zero(), Scalar::zero())));
    }
    let mut xs = vec![Scalar::zero(), bbox.width.clone()];
    let mut ys = vec![Scalar::zero(), bbox.height.clone()];
    for s in sets {
        for r in &s.rectangles {
            xs.push(r.x_lo.clone());
            xs.push(r.x_hi.clone());
            ys.push(r.y_lo.clone());
            ys.push(r.y_hi.clone());
        }
    }
    let xs = sorted_unique(xs);
    let ys = sorted_unique(ys);
    let top = ys.len() - 1;

    let indexed: Vec<Vec<Indexed>> = sets
        .iter()
        .map(|s| {
            s.rectangles
                .iter()
                .map(|r| Indexed {
                    x_lo: position(&xs, &r.x_lo),
                    x_hi: position(&xs, &r.x_hi),
                    y_lo: position(&ys, &r.y_lo),
                    y_hi: position(&ys, &r.y_hi),
                })
                .collect()
        })
        .collect();

    // sets whose active rectangles change at each event
    let mut touched: Vec<Vec<usize>> = vec![Vec::new(); xs.len()];
    for (s, rects) in indexed.iter().enumerate() {
        for r in rects {
            touched[r.x_lo].push(s);
            if r.x_hi + 1 < xs.len() {
                touched[r.x_hi + 1].push(s);
            }
        }
    }

    let k = sets.len() as i64;
    let mut tree = LazyMinTree::new(ys.clone());
    tree.add_indices(0, ys.len(), k);
    let mut complement: Vec<(usize, usize)> = vec![(0, ys.len()); sets.len()];

    for (j, changed) in touched.iter_mut().enumerate() {
        changed.sort_unstable();
        changed.dedup();
        for &s in changed.iter() {
            let mut bottom: Option<usize> = None;
            let mut upper: Option<usize> = None;
            let mut full = false;
            for r in indexed[s].iter().filter(|r| r.x_lo <= j && j <= r.x_hi) {
                match (r.y_lo == 0, r.y_hi == top) {
                    (true, true) => full = true,
                    (true, false) => bottom = Some(bottom.map_or(r.y_hi, |b| b.max(r.y_hi))),
                    (false, _) => upper = Some(upper.map_or(r.y_lo, |t| t.min(r.y_lo))),
                }
            }
            let fresh = if full {
                (0, 0)
            } else {
                let first = bottom.map_or(0, |b| b + 1);
                let last = upper.unwrap_or(ys.len());
                (first, last.max(first))
            };
            let old = complement[s];
            if old != fresh {
                tree.add_indices(old.0, old.1, -1);
                tree.add_indices(fresh.0, fresh.1, 1);
                complement[s] = fresh;
            }
        }
        debug_assert!(tree.global_min() >= 0);
        if tree.global_min() == 0 {
            let y = tree.argmin().expect("nonempty key set");
            return Ok(Some((xs[j].clone(), ys[y].clone())));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn rect(x: (i64, i64), y: (i64, i64), den: i64) -> CornerRectangle {
        CornerRectangle { x_lo: frac(x.0, den), x_hi: frac(x.1, den), y_lo: frac(y.0, den), y_hi: frac(y.1, den) }
    }

    fn unit() -> BoundingBox {
        BoundingBox { width: Scalar::one(), height: Scalar::one() }
    }

    fn set(index: usize, rectangles: Vec<CornerRectangle>) -> RectangleSet {
        RectangleSet { index, rectangles }
    }

    fn unit_path() -> Instance {
        use crate::model::InstanceSpec;
        Instance::build(&InstanceSpec {
            weights: vec![Scalar::one(); 4],
            edges: (0..3).map(|i| (i, i + 1, Scalar::one())).collect(),
            pairs: vec![(0, 3), (1, 2)],
        })
        .unwrap()
    }

    #[test]
    fn rectangle_set_on_outer_edges() {
        let inst = unit_path();
        let s = build_rectangle_set(&inst, 0, 0, 2, &frac(1, 2)).unwrap();
        assert_eq!(s.rectangles, vec![rect((0, 1), (1, 2), 2)]);
        assert_eq!(build_rectangle_set(&inst, 0, 1, 1, &frac(0, 1)), None);
        assert_eq!(build_rectangle_set(&inst, 0, 0, 2, &frac(0, 1)).unwrap().rectangles, vec![rect((0, 0), (1, 1), 1)]);
        let all = build_rectangle_set(&inst, 0, 0, 2, &Scalar::from_int(3)).unwrap();
        assert!(all.rectangles.contains(&rect((0, 1), (0, 1), 1)));
    }

    #[test]
    fn whole_box_is_hit_at_origin() {
        let sets = [set(0, vec![rect((0, 1), (0, 1), 1)])];
        assert_eq!(pierce(&unit(), &sets).unwrap(), Some((frac(0, 1), frac(0, 1))));
    }

    #[test]
    fn opposite_quadrants_miss() {
        let sets = [set(0, vec![rect((0, 2), (0, 2), 5)]), set(1, vec![rect((3, 5), (3, 5), 5)])];
        assert_eq!(pierce(&unit(), &sets).unwrap(), None);
    }

    #[test]
    fn touching_halves_meet_on_shared_side() {
        let sets = [set(0, vec![rect((0, 1), (0, 2), 2)]), set(1, vec![rect((1, 2), (0, 2), 2)])];
        let (x, y) = pierce(&unit(), &sets).unwrap().unwrap();
        assert_eq!(x, frac(1, 2));
        assert!(hits_all(&sets, &x, &y));
    }

    #[test]
    fn touching_corners_share_one_point() {
        let sets = [set(0, vec![rect((0, 1), (0, 1), 2)]), set(1, vec![rect((1, 2), (1, 2), 2)])];
        assert_eq!(pierce(&unit(), &sets).unwrap(), Some((frac(1, 2), frac(1, 2))));
    }

    #[test]
    fn no_sets_is_vacuous() {
        assert_eq!(pierce(&unit(), &[]).unwrap(), Some((Scalar::zero(), Scalar::zero())));
    }

    #[test]
    fn rejects_floating_rectangles() {
        let sets = [set(0, vec![rect((1, 2), (1, 2), 4)])];
        assert_eq!(pierce(&unit(), &sets), Err(PierceError::NotCornerAnchored { set: 0, rectangle: 0 }));
        assert_eq!(pierce(&unit(), &[set(0, vec![])]), Err(PierceError::EmptySet { set: 0 }));
    }
}
