//! Seeded random instances.

use std::ops::RangeInclusive;

use bicenter_core::{InstanceSpec, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphKind {
    Tree,
    ConnectedGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    /// A perfect matching on all vertices (one vertex left out when `n` is odd).
    All,
    /// A perfect matching on a random subset of even size, at least two.
    Subset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub seed: u64,
    pub n: usize,
    /// Edge count; defaults to `n − 1` for trees and `min(2n, n(n−1)/2)` for graphs.
    pub m: Option<usize>,
    pub kind: GraphKind,
    pub weights: RangeInclusive<i64>,
    pub lengths: RangeInclusive<i64>,
    pub pairs: PairMode,
}

impl GenParams {
    pub fn new(seed: u64, n: usize, kind: GraphKind) -> Self {
        GenParams { seed, n, m: None, kind, weights: 1..=5, lengths: 1..=9, pairs: PairMode::Subset }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("need at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("a tree on {n} vertices has {} edges, not {m}", n - 1)]
    TreeEdgeCount { n: usize, m: usize },
    #[error("{m} edges cannot connect {n} vertices without parallel edges (need {} to {max})", n - 1)]
    EdgeCount { n: usize, m: usize, max: usize },
    #[error("weight range {lo}..{hi} must be non-empty and non-negative")]
    Weights { lo: i64, hi: i64 },
    #[error("length range {lo}..{hi} must be non-empty and positive")]
    Lengths { lo: i64, hi: i64 },
}

/// Parses `a..b` (inclusive) or a single integer.
pub fn parse_range(text: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|_| format!("invalid range `{text}`"));
    match text.split_once("..") {
        Some((a, b)) => Ok(parse(a)?..=parse(b.trim_start_matches('='))?),
        None => {
            let a = parse(text)?;
            Ok(a..=a)
        }
    }
}

/// A random instance; equal params give equal output.
pub fn generate(params: &GenParams) -> Result<InstanceSpec, GenError> {
    let n = params.n;
    if n < 2 {
        return Err(GenError::TooFewVertices(n));
    }
    let max = n * (n - 1) / 2;
    let m = match (params.kind, params.m) {
        (GraphKind::Tree, None) => n - 1,
        (GraphKind::Tree, Some(m)) if m != n - 1 => return Err(GenError::TreeEdgeCount { n, m }),
        (GraphKind::Tree, Some(m)) => m,
        (GraphKind::ConnectedGraph, None) => (2 * n).min(max),
        (GraphKind::ConnectedGraph, Some(m)) if m < n - 1 || m > max => return Err(GenError::EdgeCount { n, m, max }),
        (GraphKind::ConnectedGraph, Some(m)) => m,
    };
    let (wl, wh) = (*params.weights.start(), *params.weights.end());
    if wl < 0 || wl > wh {
        return Err(GenError::Weights { lo: wl, hi: wh });
    }
    let (ll, lh) = (*params.lengths.start(), *params.lengths.end());
    if ll < 1 || ll > lh {
        return Err(GenError::Lengths { lo: ll, hi: lh });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);

    let mut present = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (label[i].min(label[j]), label[i].max(label[j]));
        present.insert((a, b));
        edges.push((a, b));
    }
    if m > n - 1 {
        let mut missing: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|e| !present.contains(e)).collect();
        missing.shuffle(&mut rng);
        edges.extend(missing.into_iter().take(m - (n - 1)));
    }
    edges.shuffle(&mut rng);
    let edges = edges
        .into_iter()
        .map(|(a, b)| {
            let (u, v) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            (u, v, Scalar::from_int(rng.gen_range(params.lengths.clone())))
        })
        .collect();

    let weights = (0..n).map(|_| Scalar::from_int(rng.gen_range(params.weights.clone()))).collect();

    let mut members: Vec<usize> = (0..n).collect();
    members.shuffle(&mut rng);
    let size = match params.pairs {
        PairMode::All => n / 2 * 2,
        PairMode::Subset => 2 * rng.gen_range(1..=n / 2),
    };
    let pairs = members[..size].chunks(2).map(|c| (c[0], c[1])).collect();

    Ok(InstanceSpec { weights, edges, pairs })
}
