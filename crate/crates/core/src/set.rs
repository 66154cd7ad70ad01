//! Word-sized vertex sets.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

/// Largest vertex count any [`Graph`](crate::Graph) may have.
pub const MAX_VERTICES: usize = 64;

/// A subset of `[0, 64)` stored as a single machine word.
///
/// Also used for sets of clique-tree node indices, which obey the same cap
/// because a chordal graph has at most `n` maximal cliques.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u64 << v);
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// The `⋈` relation: neither set contains the other.
    pub fn incomparable(self, other: VertexSet) -> bool {
        !self.is_subset(other) && !other.is_subset(self)
    }

    /// Complement relative to `[0, n)`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `k` members, in increasing numeric order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = VertexSet> {
        let members = self.to_vec();
        Combinations::new(members.len(), k).map(move |idx| idx.iter().map(|&i| members[i]).collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
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

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Members in increasing order.
#[derive(Clone)]
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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

macro_rules! bitop {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $atr for VertexSet {
            fn $af(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

bitop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
bitop!(BitOr, bitor, BitOrAssign, bitor_assign, |);

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

/// Lexicographic `k`-combinations of `0..n`.
pub(crate) struct Combinations {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations { idx: (0..k).collect(), n, done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
