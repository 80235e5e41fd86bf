//! Vertex-to-vertex distances: a Dijkstra all-pairs matrix for general graphs
//! and an LCA-backed rooted view for trees.

use alloc::boxed::Box;
use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use crate::model::Edge;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub(crate) enum Metric {
    Matrix { n: usize, dist: Vec<Scalar> },
    Tree(Box<RootedTree>),
}

impl Metric {
    pub(crate) fn dist(&self, a: usize, b: usize) -> Scalar {
        match self {
            Metric::Matrix { n, dist } => dist[a * n + b].clone(),
            Metric::Tree(tree) => tree.distance(a, b),
        }
    }
}

#[derive(PartialEq, Eq)]
struct HeapEntry {
    dist: Scalar,
    vertex: usize,
}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dist.cmp(&other.dist).then(self.vertex.cmp(&other.vertex))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Single-source shortest paths with exact lengths. `None` marks unreachable vertices.
pub fn dijkstra(n: usize, adjacency: &[Vec<usize>], edges: &[Edge], source: usize) -> Vec<Option<Scalar>> {
    let mut dist: Vec<Option<Scalar>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[source] = Some(Scalar::zero());
    heap.push(Reverse(HeapEntry { dist: Scalar::zero(), vertex: source }));
    while let Some(Reverse(HeapEntry { dist: d, vertex })) = heap.pop() {
        if done[vertex] {
            continue;
        }
        done[vertex] = true;
        for &e in &adjacency[vertex] {
            let edge = &edges[e];
            let next = edge.other(vertex);
            let candidate = &d + &edge.length;
            let better = match &dist[next] {
                Some(current) => candidate < *current,
                None => true,
            };
            if better {
                dist[next] = Some(candidate.clone());
                heap.push(Reverse(HeapEntry { dist: candidate, vertex: next }));
            }
        }
    }
    dist
}

/// All-pairs matrix, row-major. Assumes the graph is connected.
pub fn all_pairs(n: usize, adjacency: &[Vec<usize>], edges: &[Edge]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n * n);
    for s in 0..n {
        out.extend(dijkstra(n, adjacency, edges, s).into_iter().map(|d| d.expect("connected graph")));
    }
    out
}

/// A tree hung from a leaf, with root distances and an Euler-tour sparse table
/// answering lowest-common-ancestor queries in O(1).
#[derive(Clone, Debug)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<Scalar>,
    hops: Vec<usize>,
    preorder: Vec<usize>,
    enter: Vec<usize>,
    exit: Vec<usize>,
    first: Vec<usize>,
    sparse: Vec<Vec<usize>>,
}

impl RootedTree {
    /// Builds the rooted view. `root` defaults to the lowest-id leaf.
    pub fn new(n: usize, adjacency: &[Vec<usize>], edges: &[Edge], root: Option<usize>) -> Self {
        let root = root.unwrap_or_else(|| (0..n).find(|&v| adjacency[v].len() <= 1).unwrap_or(0));
        let mut parent = vec![None; n];
        let mut parent_edge = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![Scalar::zero(); n];
        let mut hops = vec![0usize; n];
        let mut preorder = Vec::with_capacity(n);
        let mut enter = vec![0; n];
        let mut exit = vec![0; n];
        let mut euler = Vec::with_capacity(2 * n);
        let mut first = vec![0; n];

        // iterative DFS: (vertex, next adjacency index)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        enter[root] = 0;
        preorder.push(root);
        first[root] = 0;
        euler.push(root);
        while let Some(top) = stack.last_mut() {
            let (v, idx) = *top;
            if idx < adjacency[v].len() {
                top.1 += 1;
                let e = adjacency[v][idx];
                let w = edges[e].other(v);
                if Some(e) == parent_edge[v] {
                    continue;
                }
                parent[w] = Some(v);
                parent_edge[w] = Some(e);
                children[v].push(w);
                depth[w] = &depth[v] + &edges[e].length;
                hops[w] = hops[v] + 1;
                enter[w] = preorder.len();
                preorder.push(w);
                first[w] = euler.len();
                euler.push(w);
                stack.push((w, 0));
            } else {
                exit[v] = preorder.len();
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    euler.push(p);
                }
            }
        }

        let len = euler.len();
        let mut sparse = vec![euler];
        let mut width = 1;
        while 2 * width <= len {
            let prev = sparse.last().expect("level 0 exists");
            let level: Vec<usize> = (0..=len - 2 * width)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + width]);
                    if hops[a] <= hops[b] {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            sparse.push(level);
            width *= 2;
        }

        RootedTree { root, parent, parent_edge, children, depth, hops, preorder, enter, exit, first, sparse }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parent_edge(&self, v: usize) -> Option<usize> {
        self.parent_edge[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Distance from the root.
    pub fn depth(&self, v: usize) -> &Scalar {
        &self.depth[v]
    }

    /// Vertices in DFS preorder from the root.
    pub fn preorder(&self) -> &[usize] {
        &self.preorder
    }

    /// Whether `v` lies in the subtree rooted at `a`.
    pub fn in_subtree(&self, a: usize, v: usize) -> bool {
        self.enter[a] <= self.enter[v] && self.enter[v] < self.exit[a]
    }

    pub fn subtree_size(&self, v: usize) -> usize {
        self.exit[v] - self.enter[v]
    }

    pub fn lca(&self, a: usize, b: usize) -> usize {
        let (mut l, mut r) = (self.first[a], self.first[b]);
        if l > r {
            core::mem::swap(&mut l, &mut r);
        }
        let span = r - l + 1;
        let k = usize::BITS as usize - 1 - span.leading_zeros() as usize;
        let x = self.sparse[k][l];
        let y = self.sparse[k][r + 1 - (1 << k)];
        if self.hops[x] <= self.hops[y] {
            x
        } else {
            y
        }
    }

    pub fn distance(&self, a: usize, b: usize) -> Scalar {
        let c = self.lca(a, b);
        let two_c = &self.depth[c] + &self.depth[c];
        &(&self.depth[a] + &self.depth[b]) - &two_c
    }
}
