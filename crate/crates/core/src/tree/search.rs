//! Smallest feasible candidate among the distance-function intersections on
//! one or two edges, without listing all of them.
//!
//! On each edge every positive-weight vertex contributes a rising line
//! `y = s·t + c` and a falling line `y = c − s·t`. A rising line `i` and a
//! falling line `j` cross at height at most `λ` exactly when the falling line
//! drops to `λ` no later than the rising line climbs to it, so the number of
//! crossings at or below `λ` is a sorted-array count. Random crossings inside
//! the current bracket serve as pivots until few are left, then the rest are
//! listed and searched directly.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::distance_function;
use crate::model::Instance;
use crate::scalar::Scalar;

const SEED: u64 = 0x6269_6365_6e74_6572;
const ENUMERATE_BELOW: u64 = 48;

/// Lines of one edge; both kinds stored as `(s, c)` with `s > 0`.
struct Family {
    rising: Vec<(Scalar, Scalar)>,
    falling: Vec<(Scalar, Scalar)>,
}

impl Family {
    fn new(instance: &Instance, e: usize, values: &mut Vec<Scalar>) -> Self {
        let mut rising = Vec::new();
        let mut falling = Vec::new();
        for v in 0..instance.vertex_count() {
            if instance.weight(v).is_zero() {
                continue;
            }
            let f = distance_function(instance, v, e);
            values.extend(f.endpoint_values());
            for p in f.pieces {
                if p.line.slope.is_positive() {
                    rising.push((p.line.slope, p.line.intercept));
                } else {
                    falling.push((-p.line.slope, p.line.intercept));
                }
            }
        }
        Family { rising, falling }
    }

    /// Per rising line, the number of crossings with height `≤ λ` (`< λ` when `strict`).
    fn row_counts(&self, lambda: &Scalar, strict: bool) -> Vec<u64> {
        let mut drop: Vec<Scalar> = self.falling.iter().map(|(s, c)| &(c - lambda) / s).collect();
        drop.sort();
        self.rising
            .iter()
            .map(|(s, c)| {
                let climb = &(lambda - c) / s;
                let k = if strict { drop.partition_point(|d| *d < climb) } else { drop.partition_point(|d| *d <= climb) };
                k as u64
            })
            .collect()
    }

    fn crossing(&self, i: usize, j: usize) -> Scalar {
        let (si, ci) = &self.rising[i];
        let (sj, cj) = &self.falling[j];
        &(&(si * cj) + &(sj * ci)) / &(si + sj)
    }
}

/// Crossing heights strictly between `lo` and `hi` for one rising line.
fn row_values(family: &Family, i: usize, lo: &Scalar, hi: &Scalar) -> Vec<Scalar> {
    (0..family.falling.len()).map(|j| family.crossing(i, j)).filter(|y| lo < y && y < hi).collect()
}

/// First feasible entry of a sorted slice, by bisection.
fn first_feasible<F: FnMut(&Scalar) -> bool>(values: &[Scalar], feasible: &mut F) -> Option<usize> {
    let (mut lo, mut hi) = (0, values.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(&values[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (lo < values.len()).then_some(lo)
}

/// Smallest value accepted by `feasible` among `upper`, 0, the piece endpoint
/// values on `edges` and all rising/falling crossing heights on each edge.
/// `upper` must be feasible and `feasible` monotone.
pub(crate) fn smallest_feasible<F: FnMut(&Scalar) -> bool>(
    instance: &Instance,
    edges: &[usize],
    upper: &Scalar,
    mut feasible: F,
) -> Scalar {
    let mut values = Vec::new();
    let families: Vec<Family> = edges.iter().map(|&e| Family::new(instance, e, &mut values)).collect();
    values.push(Scalar::zero());
    values.push(upper.clone());
    values.retain(|v| !v.is_negative() && v <= upper);
    values.sort();
    values.dedup();

    let idx = first_feasible(&values, &mut feasible).expect("upper bound is feasible");
    let mut hi = values[idx].clone();
    if idx == 0 {
        return hi;
    }
    let mut lo = values[idx - 1].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    loop {
        // per-row counts of crossings in (lo, hi)
        let mut rows: Vec<(usize, usize, u64)> = Vec::new();
        let mut total = 0u64;
        for (f, family) in families.iter().enumerate() {
            let below_hi = family.row_counts(&hi, true);
            let at_lo = family.row_counts(&lo, false);
            for (i, (a, b)) in below_hi.iter().zip(&at_lo).enumerate() {
                let c = a.saturating_sub(*b);
                if c > 0 {
                    rows.push((f, i, c));
                    total += c;
                }
            }
        }
        if total == 0 {
            return hi;
        }
        if total <= ENUMERATE_BELOW {
            let mut rest: Vec<Scalar> =
                rows.iter().flat_map(|&(f, i, _)| row_values(&families[f], i, &lo, &hi)).collect();
            rest.sort();
            rest.dedup();
            return match first_feasible(&rest, &mut feasible) {
                Some(k) => rest[k].clone(),
                None => hi,
            };
        }
        let mut r = rng.next_u64() % total;
        let &(f, i, c) = rows
            .iter()
            .find(|&&(_, _, c)| {
                if r < c {
                    true
                } else {
                    r -= c;
                    false
                }
            })
            .expect("rank within total");
        let mut row = row_values(&families[f], i, &lo, &hi);
        debug_assert_eq!(row.len() as u64, c);
        row.sort();
        let pivot = row.swap_remove(r as usize);
        if feasible(&pivot) {
            hi = pivot;
        } else {
            lo = pivot;
        }
    }
}
