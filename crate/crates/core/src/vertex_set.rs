//! Subsets of `[m] = {1, ..., m}` as machine-word bitmasks.
//!
//! Vertex `v` occupies bit `v - 1`. All set algebra is O(1); the cap of 63
//! vertices is far beyond what the chain-complex builders can handle anyway.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const MAX_VERTICES: usize = 63;

    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// The full set `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= Self::MAX_VERTICES);
        VertexSet((1u64 << m) - 1)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=Self::MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut s = Self::empty();
        for v in vertices {
            s = s.insert(v);
        }
        s
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    #[must_use]
    pub fn insert(self, v: usize) -> Self {
        debug_assert!((1..=Self::MAX_VERTICES).contains(&v));
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    #[must_use]
    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=Self::MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement within `{1, ..., m}`.
    #[must_use]
    pub fn complement_in(self, m: usize) -> Self {
        VertexSet(Self::full(m).0 & !self.0)
    }

    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Vertices in ascending order (1-based).
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets of this set, including the empty set and the set itself.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        // Standard subset-walk of a mask: (sub - mask) & mask steps through
        // all submasks in increasing numeric order of the complement walk.
        let mask = self.0;
        let mut sub = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            if sub == mask {
                done = true;
            } else {
                sub = (sub.wrapping_sub(mask)) & mask;
            }
            Some(VertexSet(cur))
        })
    }

    /// Canonical sort key: cardinality first, then numeric bitmask value.
    pub fn canonical_key(self) -> (usize, u64) {
        (self.cardinality(), self.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
