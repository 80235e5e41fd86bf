//! Centroids of a tree and of connected vertex subsets of it.

use alloc::vec;
use alloc::vec::Vec;

use crate::model::Instance;
use crate::solve::SolveError;

/// Centroid of the connected vertex set `region`: the lowest-id vertex whose
/// removal leaves no piece of `region` with more than `|region| / 2` vertices.
pub(crate) fn region_centroid(instance: &Instance, region: &[usize]) -> usize {
    let n = instance.vertex_count();
    let mut inside = vec![false; n];
    for &v in region {
        inside[v] = true;
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(region.len());
    let start = region[0];
    parent[start] = start;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        order.push(x);
        for &e in instance.incident(x) {
            let y = instance.edge(e).other(x);
            if inside[y] && parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    debug_assert_eq!(order.len(), region.len(), "region must be connected");

    let total = region.len();
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n];
    for &x in order.iter().rev() {
        if x != start {
            let p = parent[x];
            size[p] += size[x];
            heaviest[p] = heaviest[p].max(size[x]);
        }
    }
    let mut best = usize::MAX;
    for &x in &order {
        let largest = heaviest[x].max(total - size[x]);
        if largest <= total / 2 && x < best {
            best = x;
        }
    }
    best
}

/// Centroid of the whole tree (lowest id on ties).
pub fn centroid(instance: &Instance) -> Result<usize, SolveError> {
    if !instance.is_tree() {
        return Err(SolveError::NotTree);
    }
    let all: Vec<usize> = (0..instance.vertex_count()).collect();
    Ok(region_centroid(instance, &all))
}
