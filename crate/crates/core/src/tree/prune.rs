//! Repeatedly strip leaves that belong to no pair.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::model::{Instance, InstanceSpec};
use crate::solve::SolveError;

/// A pruned tree with maps back to the input ids. Surviving vertices keep
/// their relative order, so edges keep their orientation and offsets carry
/// over unchanged.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub instance: Instance,
    /// New vertex id → original vertex id.
    pub vertices: Vec<usize>,
    /// New edge id → original edge id.
    pub edges: Vec<usize>,
}

/// Removes unpaired leaves until every leaf is paired. Without pairs a single
/// vertex (the lowest id that survives) is kept.
pub fn prune_unpaired_leaves(instance: &Instance) -> Result<Pruned, SolveError> {
    if !instance.is_tree() {
        return Err(SolveError::NotTree);
    }
    let n = instance.vertex_count();
    let paired = instance.pair_of();
    let mut degree: Vec<usize> = (0..n).map(|v| instance.incident(v).len()).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1 && paired[v].is_none()).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] || remaining == 1 {
            continue;
        }
        alive[v] = false;
        remaining -= 1;
        for &e in instance.incident(v) {
            let y = instance.edge(e).other(v);
            if alive[y] {
                degree[y] -= 1;
                if degree[y] <= 1 && paired[y].is_none() {
                    queue.push_back(y);
                }
            }
        }
    }

    let vertices: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        new_id[v] = i;
    }
    let edges: Vec<usize> =
        (0..instance.edge_count()).filter(|&e| alive[instance.edge(e).u] && alive[instance.edge(e).v]).collect();
    let spec = InstanceSpec {
        weights: vertices.iter().map(|&v| instance.weight(v).clone()).collect(),
        edges: edges
            .iter()
            .map(|&e| {
                let edge = instance.edge(e);
                (new_id[edge.u], new_id[edge.v], edge.length.clone())
            })
            .collect(),
        pairs: instance.pairs().iter().map(|p| (new_id[p.v], new_id[p.u])).collect(),
    };
    let pruned = Instance::build(&spec).expect("pruning keeps a valid tree");
    Ok(Pruned { instance: pruned, vertices, edges })
}
