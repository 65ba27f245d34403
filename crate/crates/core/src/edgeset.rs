use std::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::EdgeId;

/// A fixed-width set of edges, indexed by [`EdgeId`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(FixedBitSet);

impl EdgeSet {
    pub fn with_capacity(edges: usize) -> Self {
        EdgeSet(FixedBitSet::with_capacity(edges))
    }

    pub fn from_edges(edges: usize, ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut set = Self::with_capacity(edges);
        for e in ids {
            set.insert(e);
        }
        set
    }

    /// Grows the set if `e` lies beyond the current width.
    pub fn insert(&mut self, e: EdgeId) {
        if e.index() >= self.0.len() {
            self.0.grow(e.index() + 1);
        }
        self.0.insert(e.index());
    }

    pub fn remove(&mut self, e: EdgeId) {
        if e.index() < self.0.len() {
            self.0.set(e.index(), false);
        }
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(e.index())
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    /// One past the largest index the set can hold.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.ones().map(EdgeId::new)
    }

    pub fn max(&self) -> Option<EdgeId> {
        self.0.maximum().map(EdgeId::new)
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        Self::from_edges(0, iter)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(EdgeId::index)).finish()
    }
}
