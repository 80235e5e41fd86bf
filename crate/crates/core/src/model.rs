//! Graphs, pair sets, validated instances, points on edges and the objective.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::metric::{all_pairs, Metric, RootedTree};
use crate::scalar::Scalar;

/// An undirected edge stored with `u < v`; offsets along it are measured from `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub length: Scalar,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// One input pair `(v_i, u_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pair {
    pub v: usize,
    pub u: usize,
}

/// Raw, unvalidated description of an instance, as read from a file or produced
/// by a generator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceSpec {
    pub weights: Vec<Scalar>,
    /// `(u, v, length)` in input order; edge ids follow this order.
    pub edges: Vec<(usize, usize, Scalar)>,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} has negative weight {weight}")]
    NegativeWeight { vertex: usize, weight: Scalar },
    #[error("edge {edge} references vertex {vertex}, but there are only {n} vertices")]
    EdgeVertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("edge {edge} is a self-loop on vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge} has non-positive length {length}")]
    NonPositiveLength { edge: usize, length: Scalar },
    #[error("edge {edge} duplicates edge {first} between {u} and {v}")]
    ParallelEdge { edge: usize, first: usize, u: usize, v: usize },
    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: usize },
    #[error("pair {pair} references vertex {vertex}, but there are only {n} vertices")]
    PairVertexOutOfRange { pair: usize, vertex: usize, n: usize },
    #[error("pair {pair} pairs vertex {vertex} with itself")]
    DegeneratePair { pair: usize, vertex: usize },
    #[error("vertex {vertex} appears in pair {pair} and in pair {first}")]
    DuplicatePairVertex { vertex: usize, pair: usize, first: usize },
}

/// Which member of a pair is served by the first center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `v_i` to `q1`, `u_i` to `q2`.
    Forward,
    /// `u_i` to `q1`, `v_i` to `q2`.
    Reverse,
}

/// A point on an edge at offset `t` from the edge's lower-indexed endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePoint {
    pub edge: usize,
    pub t: Scalar,
}

/// An optimal placement: objective value, both centers and the per-pair split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub lambda: Scalar,
    pub q1: EdgePoint,
    pub q2: EdgePoint,
    pub assignment: Vec<Orientation>,
}

/// A validated instance with distances precomputed.
#[derive(Clone, Debug)]
pub struct Instance {
    weights: Vec<Scalar>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    metric: Metric,
}

impl Instance {
    /// Validates `spec` and computes distances: Dijkstra from every vertex for
    /// general graphs, a rooted LCA structure for trees.
    pub fn build(spec: &InstanceSpec) -> Result<Instance, BuildError> {
        let n = spec.weights.len();
        if n == 0 {
            return Err(BuildError::Empty);
        }
        for (vertex, weight) in spec.weights.iter().enumerate() {
            if weight.is_negative() {
                return Err(BuildError::NegativeWeight { vertex, weight: weight.clone() });
            }
        }
        let mut edges = Vec::with_capacity(spec.edges.len());
        let mut adjacency = vec![Vec::new(); n];
        for (id, (a, b, length)) in spec.edges.iter().enumerate() {
            for &x in [a, b] {
                if x >= n {
                    return Err(BuildError::EdgeVertexOutOfRange { edge: id, vertex: x, n });
                }
            }
            if a == b {
                return Err(BuildError::SelfLoop { edge: id, vertex: *a });
            }
            if !length.is_positive() {
                return Err(BuildError::NonPositiveLength { edge: id, length: length.clone() });
            }
            let (u, v) = if a < b { (*a, *b) } else { (*b, *a) };
            if let Some(&first) = adjacency[u].iter().find(|&&e: &&usize| {
                let other: &Edge = &edges[e];
                other.other(u) == v
            }) {
                return Err(BuildError::ParallelEdge { edge: id, first, u, v });
            }
            adjacency[u].push(id);
            adjacency[v].push(id);
            edges.push(Edge { u, v, length: length.clone() });
        }

        // connectivity from vertex 0
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &e in &adjacency[x] {
                let y = edges[e].other(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if let Some(vertex) = seen.iter().position(|s| !s) {
            return Err(BuildError::Disconnected { vertex });
        }

        let mut owner: Vec<Option<usize>> = vec![None; n];
        let mut pairs = Vec::with_capacity(spec.pairs.len());
        for (id, &(v, u)) in spec.pairs.iter().enumerate() {
            for x in [v, u] {
                if x >= n {
                    return Err(BuildError::PairVertexOutOfRange { pair: id, vertex: x, n });
                }
            }
            if v == u {
                return Err(BuildError::DegeneratePair { pair: id, vertex: v });
            }
            for x in [v, u] {
                if let Some(first) = owner[x] {
                    return Err(BuildError::DuplicatePairVertex { vertex: x, pair: id, first });
                }
                owner[x] = Some(id);
            }
            pairs.push(Pair { v, u });
        }

        let metric = if edges.len() + 1 == n {
            Metric::Tree(Box::new(RootedTree::new(n, &adjacency, &edges, None)))
        } else {
            Metric::Matrix { n, dist: all_pairs(n, &adjacency, &edges) }
        };
        Ok(Instance { weights: spec.weights.clone(), edges, adjacency, pairs, metric })
    }

    /// The raw description this instance was built from (edges in canonical orientation).
    pub fn to_spec(&self) -> InstanceSpec {
        InstanceSpec {
            weights: self.weights.clone(),
            edges: self.edges.iter().map(|e| (e.u, e.v, e.length.clone())).collect(),
            pairs: self.pairs.iter().map(|p| (p.v, p.u)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn weight(&self, v: usize) -> &Scalar {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn pair(&self, i: usize) -> Pair {
        self.pairs[i]
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.weights.len()
    }

    /// The rooted view used for tree distances; `None` for non-tree graphs.
    pub fn rooted(&self) -> Option<&RootedTree> {
        match &self.metric {
            Metric::Tree(t) => Some(t),
            Metric::Matrix { .. } => None,
        }
    }

    /// Shortest-path distance between two vertices.
    pub fn dist(&self, a: usize, b: usize) -> Scalar {
        self.metric.dist(a, b)
    }

    /// Every vertex belongs to a pair.
    pub fn is_fully_paired(&self) -> bool {
        2 * self.pairs.len() == self.weights.len()
    }

    /// For each vertex, the index of the pair containing it.
    pub fn pair_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.vertex_count()];
        for (i, p) in self.pairs.iter().enumerate() {
            out[p.v] = Some(i);
            out[p.u] = Some(i);
        }
        out
    }

    /// Zeroes the weight of unpaired vertices, adds a zero-weight vertex hung
    /// from vertex 0 by a unit edge when the vertex count is odd, and pairs the
    /// leftovers in ascending id order. Fully paired even instances come back
    /// unchanged.
    pub fn normalize(&self) -> Instance {
        if self.is_fully_paired() {
            return self.clone();
        }
        let mut spec = self.to_spec();
        let owner = self.pair_of();
        let mut unpaired: Vec<usize> = (0..self.vertex_count()).filter(|&v| owner[v].is_none()).collect();
        for &v in &unpaired {
            spec.weights[v] = Scalar::zero();
        }
        if self.vertex_count() % 2 == 1 {
            let extra = self.vertex_count();
            spec.weights.push(Scalar::zero());
            spec.edges.push((0, extra, Scalar::one()));
            unpaired.push(extra);
        }
        for chunk in unpaired.chunks(2) {
            spec.pairs.push((chunk[0], chunk[1]));
        }
        Instance::build(&spec).expect("normalizing a valid instance keeps it valid")
    }

    /// The canonical point denoting vertex `v`: on its first incident edge.
    /// Panics for an isolated vertex (only possible when `n == 1`).
    pub fn vertex_point(&self, v: usize) -> EdgePoint {
        let e = *self.adjacency[v].first().expect("vertex has an incident edge");
        let edge = &self.edges[e];
        let t = if edge.u == v { Scalar::zero() } else { edge.length.clone() };
        EdgePoint { edge: e, t }
    }

    /// The vertex a point sits on, if it is an edge endpoint.
    pub fn point_vertex(&self, p: &EdgePoint) -> Option<usize> {
        let edge = &self.edges[p.edge];
        if p.t.is_zero() {
            Some(edge.u)
        } else if p.t == edge.length {
            Some(edge.v)
        } else {
            None
        }
    }

    /// Point equality that identifies vertex points given via different edges.
    pub fn same_point(&self, p: &EdgePoint, q: &EdgePoint) -> bool {
        match (self.point_vertex(p), self.point_vertex(q)) {
            (Some(a), Some(b)) => a == b,
            (None, None) => p == q,
            _ => false,
        }
    }

    /// Distance from vertex `x` to point `p`.
    pub fn vertex_distance(&self, x: usize, p: &EdgePoint) -> Scalar {
        let edge = &self.edges[p.edge];
        let via_u = &self.dist(x, edge.u) + &p.t;
        let via_v = &self.dist(x, edge.v) + &(&edge.length - &p.t);
        if via_v < via_u {
            via_v
        } else {
            via_u
        }
    }

    /// `w(x) · d(x, p)`.
    pub fn weighted_distance(&self, x: usize, p: &EdgePoint) -> Scalar {
        if self.weights[x].is_zero() {
            return Scalar::zero();
        }
        &self.weights[x] * &self.vertex_distance(x, p)
    }

    /// Shortest-path distance between two arbitrary points.
    pub fn point_distance(&self, p: &EdgePoint, q: &EdgePoint) -> Scalar {
        let ep = &self.edges[p.edge];
        let eq = &self.edges[q.edge];
        let p_sides = [(ep.u, p.t.clone()), (ep.v, &ep.length - &p.t)];
        let q_sides = [(eq.u, q.t.clone()), (eq.v, &eq.length - &q.t)];
        let mut best: Option<Scalar> = None;
        for (a, da) in &p_sides {
            for (b, db) in &q_sides {
                let d = &(da + &self.dist(*a, *b)) + db;
                if best.as_ref().is_none_or(|x| d < *x) {
                    best = Some(d);
                }
            }
        }
        let mut best = best.expect("four routes");
        if p.edge == q.edge {
            let direct = (&p.t - &q.t).abs();
            if direct < best {
                best = direct;
            }
        }
        best
    }

    /// Cost of serving pair `i` in one orientation.
    pub fn pair_cost(&self, i: usize, q1: &EdgePoint, q2: &EdgePoint, orientation: Orientation) -> Scalar {
        let Pair { v, u } = self.pairs[i];
        let (first, second) = match orientation {
            Orientation::Forward => (v, u),
            Orientation::Reverse => (u, v),
        };
        let a = self.weighted_distance(first, q1);
        let b = self.weighted_distance(second, q2);
        if a > b {
            a
        } else {
            b
        }
    }

    /// φ_i: the cheaper of the two ways to split pair `i` between `q1` and `q2`.
    pub fn phi(&self, i: usize, q1: &EdgePoint, q2: &EdgePoint) -> Scalar {
        let forward = self.pair_cost(i, q1, q2, Orientation::Forward);
        let reverse = self.pair_cost(i, q1, q2, Orientation::Reverse);
        if reverse < forward {
            reverse
        } else {
            forward
        }
    }

    /// Max over pairs of φ_i, or of the fixed-orientation cost when an
    /// assignment is given. Zero when there are no pairs.
    pub fn objective(&self, q1: &EdgePoint, q2: &EdgePoint, assignment: Option<&[Orientation]>) -> Scalar {
        let mut best = Scalar::zero();
        for i in 0..self.pairs.len() {
            let value = match assignment {
                Some(a) => self.pair_cost(i, q1, q2, a[i]),
                None => self.phi(i, q1, q2),
            };
            if value > best {
                best = value;
            }
        }
        best
    }

    /// For each pair, the orientation attaining φ_i; ties go to `Forward`.
    pub fn best_assignment(&self, q1: &EdgePoint, q2: &EdgePoint) -> Vec<Orientation> {
        (0..self.pairs.len())
            .map(|i| {
                let forward = self.pair_cost(i, q1, q2, Orientation::Forward);
                let reverse = self.pair_cost(i, q1, q2, Orientation::Reverse);
                if reverse < forward {
                    Orientation::Reverse
                } else {
                    Orientation::Forward
                }
            })
            .collect()
    }

    /// One-center objective of all vertices at `q` (max weighted distance).
    pub fn one_center_value(&self, q: &EdgePoint) -> Scalar {
        (0..self.vertex_count()).map(|x| self.weighted_distance(x, q)).max().unwrap_or_else(Scalar::zero)
    }
}
