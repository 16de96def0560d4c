//! Dense vertex sets over a fixed universe 0..n.
//!
//! Every set remembers the size of its universe so complements are
//! well-defined. Mixing sets from different universes is a logic error
//! and asserted in debug builds.

use std::fmt;

use fixedbitset::FixedBitSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut s = Self::empty(universe);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Size of the universe, not the cardinality of the set.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.bits.len(), "vertex {v} outside universe");
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        s.bits.toggle_range(..);
        s
    }

    pub fn with(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Sets order by cardinality first, then lexicographically by ascending
/// member list. This is the canonical order used when listing halfspaces.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
