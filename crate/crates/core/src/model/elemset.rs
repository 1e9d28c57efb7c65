use std::fmt;

/// Most elements a universe may have, since subsets are 64-bit masks.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of a universe, stored as a bitmask over element indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    /// The whole universe of `size` elements.
    pub fn full(size: usize) -> ElemSet {
        if size >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << size) - 1)
        }
    }

    pub fn singleton(i: usize) -> ElemSet {
        ElemSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> ElemSet {
        items.into_iter().fold(ElemSet::EMPTY, |s, i| s.with(i))
    }

    pub fn with(self, i: usize) -> ElemSet {
        ElemSet(self.0 | 1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn complement(self, size: usize) -> ElemSet {
        ElemSet::full(size).difference(self)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }

    /// Every subset of a universe of `size` elements, in mask order.
    pub fn all_subsets(size: usize) -> impl Iterator<Item = ElemSet> {
        (0..1u64 << size).map(ElemSet)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
