#![allow(dead_code)]

use bicenter_core::{Instance, InstanceSpec, Scalar};
use proptest::prelude::*;
use proptest::sample::Index;

fn assemble(
    n: usize,
    parents: Vec<Index>,
    extra: Vec<(Index, Index)>,
    weights: Vec<i64>,
    lengths: Vec<i64>,
    order: Vec<usize>,
    pair_count: usize,
) -> InstanceSpec {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (parents[i - 1].index(i), i)).collect();
    for (a, b) in extra {
        let (a, b) = (a.index(n), b.index(n));
        let key = (a.min(b), a.max(b));
        if a != b && !edges.iter().any(|&(x, y)| (x.min(y), x.max(y)) == key) {
            edges.push((a, b));
        }
    }
    let edges = edges.into_iter().zip(lengths.into_iter().cycle()).map(|((a, b), l)| (a, b, Scalar::from_int(l))).collect();
    let pairs = order[..2 * pair_count.min(n / 2)].chunks(2).map(|c| (c[0], c[1])).collect();
    InstanceSpec { weights: weights.into_iter().map(Scalar::from_int).collect(), edges, pairs }
}

/// Connected instances with `n` in `min_n..=max_n`, up to `extra` edges beyond
/// a spanning tree, weights in `weights`, lengths 1–9.
pub fn arb_spec(
    min_n: usize,
    max_n: usize,
    extra: usize,
    weights: std::ops::RangeInclusive<i64>,
) -> impl Strategy<Value = InstanceSpec> {
    (min_n..=max_n).prop_flat_map(move |n| {
        (
            proptest::collection::vec(any::<Index>(), n - 1),
            proptest::collection::vec((any::<Index>(), any::<Index>()), 0..=extra),
            proptest::collection::vec(weights.clone(), n),
            proptest::collection::vec(1i64..=9, n - 1 + extra),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            0..=n / 2,
        )
            .prop_map(move |(p, e, w, l, o, k)| assemble(n, p, e, w, l, o, k))
    })
}

pub fn arb_tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Instance> {
    arb_spec(min_n, max_n, 0, 0..=5).prop_map(|s| Instance::build(&s).unwrap())
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Instance> {
    arb_spec(min_n, max_n, 6, 0..=5).prop_map(|s| Instance::build(&s).unwrap())
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Unit path 0–1–2–3 with pairs (0,3) and (1,2) and the given weights.
pub fn unit_path(weights: [i64; 4]) -> Instance {
    Instance::build(&InstanceSpec {
        weights: weights.iter().map(|&w| int(w)).collect(),
        edges: (0..3).map(|i| (i, i + 1, int(1))).collect(),
        pairs: vec![(0, 3), (1, 2)],
    })
    .unwrap()
}
