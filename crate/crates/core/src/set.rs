//! Vertex sets as 64-bit masks.
//!
//! Every graph in this crate has at most 64 vertices, so a set of vertices
//! packs into one machine word. Subset tests, intersections, and membership
//! are single instructions, which is what makes the exhaustive searches in
//! [`crate::metric`] affordable.

use std::fmt;

/// A set of vertex ids drawn from `0..64`, stored as a bitmask.
///
/// Iteration and the `Display` form are always in ascending vertex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, .., n-1}`. `n` must be at most 64.
    pub fn all(n: usize) -> VertexSet {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < 64);
        VertexSet(1u64 << v)
    }

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < 64);
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex in the set, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All `k`-element subsets of `{0, .., n-1}` in lexicographic order of their
/// ascending-vertex views: `{0,1}, {0,2}, .., {1,2}, ..`.
///
/// Lexicographic order is a determinism contract: whenever a search returns
/// "the first" subset with some property, this is the order that defines it.
/// Note it differs from numeric order of the underlying masks.
pub fn k_subsets(n: usize, k: usize) -> Combinations {
    Combinations::new(n, k)
}

pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    state: CombState,
}

enum CombState {
    Fresh,
    Running,
    Done,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        debug_assert!(n <= 64);
        let state = if k > n { CombState::Done } else { CombState::Fresh };
        Combinations {
            n,
            idx: (0..k).collect(),
            state,
        }
    }

    fn current(&self) -> VertexSet {
        self.idx.iter().copied().collect()
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        match self.state {
            CombState::Done => None,
            CombState::Fresh => {
                self.state = CombState::Running;
                Some(self.current())
            }
            CombState::Running => {
                let k = self.idx.len();
                // Rightmost index that can still move right.
                let mut i = k;
                while i > 0 {
                    i -= 1;
                    if self.idx[i] != i + self.n - k {
                        self.idx[i] += 1;
                        for j in i + 1..k {
                            self.idx[j] = self.idx[j - 1] + 1;
                        }
                        return Some(self.current());
                    }
                }
                self.state = CombState::Done;
                None
            }
        }
    }
}
