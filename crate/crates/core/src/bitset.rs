//! Vertex sets as 32-bit masks.

use std::fmt;

/// Maximum number of vertices supported throughout the crate.
pub const MAX_VERTICES: usize = 32;

/// A set of vertices, stored as a bitmask. Bit `i` is vertex `i`.
///
/// Sets are plain values; operations return new sets. The ambient vertex
/// count is not stored here, so complements need it passed in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All of `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    /// Elements of `self` not in `other`.
    #[inline]
    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement inside the ambient set `0..n`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        VertexSet(Self::full(n).0 & !self.0)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest vertex, if any.
    #[inline]
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing mask order (so `EMPTY` first,
    /// `self` last).
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                // Standard subset-enumeration step within a mask.
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VertexSet(cur))
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
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

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
