mod common;

use std::ops::{Bound, RangeBounds};

use bicenter_core::lazy_min::LazyMinTree;
use bicenter_core::oracle::oracle_pierce;
use bicenter_core::piercing::{hits_all, pierce, BoundingBox, CornerRectangle, PierceError, RectangleSet};
use bicenter_core::Scalar;
use common::{frac, int};
use proptest::prelude::*;

fn rect(x: (i64, i64), y: (i64, i64)) -> CornerRectangle {
    CornerRectangle { x_lo: frac(x.0, 2), x_hi: frac(x.1, 2), y_lo: frac(y.0, 2), y_hi: frac(y.1, 2) }
}

fn unit_box() -> BoundingBox {
    BoundingBox { width: int(1), height: int(1) }
}

#[test]
fn boundary_touching_halves() {
    let sets = [
        RectangleSet { index: 0, rectangles: vec![rect((0, 1), (0, 2))] },
        RectangleSet { index: 1, rectangles: vec![rect((1, 2), (0, 2))] },
    ];
    let (x, y) = pierce(&unit_box(), &sets).unwrap().unwrap();
    assert_eq!(x, frac(1, 2));
    assert!(hits_all(&sets, &x, &y));
}

#[test]
fn opposite_corners_miss() {
    let sets = [
        RectangleSet { index: 0, rectangles: vec![CornerRectangle { x_lo: int(0), x_hi: frac(1, 4), y_lo: int(0), y_hi: frac(1, 4) }] },
        RectangleSet { index: 1, rectangles: vec![CornerRectangle { x_lo: frac(3, 4), x_hi: int(1), y_lo: frac(3, 4), y_hi: int(1) }] },
    ];
    assert_eq!(pierce(&unit_box(), &sets).unwrap(), None);
    assert_eq!(oracle_pierce(&unit_box(), &sets), None);
}

#[test]
fn rejects_floating_rectangles() {
    let sets = [RectangleSet { index: 0, rectangles: vec![CornerRectangle { x_lo: frac(1, 4), x_hi: frac(1, 2), y_lo: frac(1, 4), y_hi: frac(1, 2) }] }];
    assert_eq!(pierce(&unit_box(), &sets), Err(PierceError::NotCornerAnchored { set: 0, rectangle: 0 }));
}

fn arb_family() -> impl Strategy<Value = (BoundingBox, Vec<RectangleSet>)> {
    (1i64..=6, 1i64..=6).prop_flat_map(|(w, h)| {
        let rectangle = (0..=w, 0..=h, any::<bool>(), any::<bool>()).prop_map(move |(x, y, left, bottom)| {
            let xs = if left { (0, x) } else { (x, w) };
            let ys = if bottom { (0, y) } else { (y, h) };
            rect(xs, ys)
        });
        let sets = proptest::collection::vec(proptest::collection::vec(rectangle, 1..=4), 1..=6).prop_map(|sets| {
            sets.into_iter().enumerate().map(|(index, rectangles)| RectangleSet { index, rectangles }).collect()
        });
        (Just(BoundingBox { width: frac(w, 2), height: frac(h, 2) }), sets)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn pierce_matches_oracle((bbox, sets) in arb_family()) {
        let found = pierce(&bbox, &sets).unwrap();
        let expected = oracle_pierce(&bbox, &sets);
        prop_assert_eq!(found.is_some(), expected.is_some());
        if let Some((x, y)) = &found {
            prop_assert!(hits_all(&sets, x, y));
        }
    }

    #[test]
    fn lazy_min_matches_naive(ops in proptest::collection::vec((0usize..20, 0usize..20, any::<bool>(), any::<bool>(), -3i64..=3), 1..200)) {
        let keys: Vec<Scalar> = (0..20).map(|i| frac(i, 7)).collect();
        let mut tree = LazyMinTree::new(keys.clone());
        let mut naive = [0i64; 20];
        for (a, b, lo_open, hi_open, c) in ops {
            let (a, b) = (a.min(b), a.max(b));
            let lo = if lo_open { Bound::Excluded(&keys[a]) } else { Bound::Included(&keys[a]) };
            let hi = if hi_open { Bound::Excluded(&keys[b]) } else { Bound::Included(&keys[b]) };
            tree.range_add(lo, hi, c).unwrap();
            for (i, k) in keys.iter().enumerate() {
                if (lo, hi).contains(k) {
                    naive[i] += c;
                }
            }
            let min = *naive.iter().min().unwrap();
            prop_assert_eq!(tree.global_min(), min);
            let arg = tree.argmin().unwrap();
            prop_assert_eq!(arg, naive.iter().position(|&x| x == min).unwrap());
            prop_assert_eq!(tree.value(arg), min);
        }
    }
}
