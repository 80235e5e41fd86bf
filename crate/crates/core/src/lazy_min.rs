//! Range-add / global-min segment tree over a fixed sorted key set.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Bound;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("range boundary {0} is not a key of the tree")]
pub struct UnknownKey(pub Scalar);

/// Leaves are the keys in ascending order, each holding a count η starting at
/// zero. Pending addends stay at the node that received them; a node's minimum
/// already includes its own addend, so the root minimum is read in O(1).
#[derive(Clone, Debug)]
pub struct LazyMinTree {
    keys: Vec<Scalar>,
    min: Vec<i64>,
    pending: Vec<i64>,
}

impl LazyMinTree {
    /// `keys` must be strictly increasing.
    pub fn new(keys: Vec<Scalar>) -> Self {
        debug_assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let size = 4 * keys.len().max(1);
        LazyMinTree { keys, min: vec![0; size], pending: vec![0; size] }
    }

    pub fn keys(&self) -> &[Scalar] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Leaf index range `[first, last)` selected by a pair of key bounds.
    pub fn index_range(&self, lo: Bound<&Scalar>, hi: Bound<&Scalar>) -> Result<(usize, usize), UnknownKey> {
        let find = |k: &Scalar| self.keys.binary_search(k).map_err(|_| UnknownKey(k.clone()));
        let first = match lo {
            Bound::Included(k) => find(k)?,
            Bound::Excluded(k) => find(k)? + 1,
            Bound::Unbounded => 0,
        };
        let last = match hi {
            Bound::Included(k) => find(k)? + 1,
            Bound::Excluded(k) => find(k)?,
            Bound::Unbounded => self.keys.len(),
        };
        Ok((first, last.max(first)))
    }

    /// Adds `c` to η of every key in the range. Open ends exclude their key.
    pub fn range_add(&mut self, lo: Bound<&Scalar>, hi: Bound<&Scalar>, c: i64) -> Result<(), UnknownKey> {
        let (first, last) = self.index_range(lo, hi)?;
        self.add_indices(first, last, c);
        Ok(())
    }

    /// Adds `c` to leaves `first..last`.
    pub fn add_indices(&mut self, first: usize, last: usize, c: i64) {
        if first < last && c != 0 {
            self.add(1, 0, self.keys.len(), first, last, c);
        }
    }

    fn add(&mut self, node: usize, lo: usize, hi: usize, first: usize, last: usize, c: i64) {
        if last <= lo || hi <= first {
            return;
        }
        if first <= lo && hi <= last {
            self.min[node] += c;
            self.pending[node] += c;
            return;
        }
        let mid = (lo + hi) / 2;
        self.add(2 * node, lo, mid, first, last, c);
        self.add(2 * node + 1, mid, hi, first, last, c);
        self.min[node] = self.min[2 * node].min(self.min[2 * node + 1]) + self.pending[node];
    }

    /// Minimum η over all leaves (0 for an empty key set).
    pub fn global_min(&self) -> i64 {
        if self.keys.is_empty() {
            0
        } else {
            self.min[1]
        }
    }

    /// Index of the lowest key attaining the global minimum.
    pub fn argmin(&self) -> Option<usize> {
        if self.keys.is_empty() {
            return None;
        }
        let (mut node, mut lo, mut hi) = (1, 0, self.keys.len());
        let mut target = self.min[1];
        while hi - lo > 1 {
            target -= self.pending[node];
            let mid = (lo + hi) / 2;
            if self.min[2 * node] == target {
                node *= 2;
                hi = mid;
            } else {
                node = 2 * node + 1;
                lo = mid;
            }
        }
        Some(lo)
    }

    /// Current η of one leaf.
    pub fn value(&self, index: usize) -> i64 {
        let (mut node, mut lo, mut hi) = (1, 0, self.keys.len());
        let mut acc = 0;
        while hi - lo > 1 {
            acc += self.pending[node];
            let mid = (lo + hi) / 2;
            if index < mid {
                node *= 2;
                hi = mid;
            } else {
                node = 2 * node + 1;
                lo = mid;
            }
        }
        acc + self.min[node]
    }
}
