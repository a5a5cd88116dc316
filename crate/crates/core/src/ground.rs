//! Ground set, subsets as bitmasks, and disjoint subset pairs.
//!
//! Criteria are numbered 1..=n externally and bit 0..n-1 internally:
//! bit `i-1` of a [`SubsetMask`] is set iff criterion `i` belongs to the
//! subset. Disjoint pairs `(A, B)` carry the product order
//! `(A, B) ⊑ (C, D) iff A ⊆ C and B ⊇ D` and are indexed in base 3
//! (digit 0 = absent, 1 = in `A`, 2 = in `B`), giving `3^n` pairs.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set for which `2^n` tables are kept.
pub const MAX_CRITERIA: usize = 16;
/// Largest ground set for which `3^n` pair tables are kept.
pub const MAX_BI_CRITERIA: usize = 12;

/// Finite referential set `{1, …, n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_CRITERIA {
            return Err(Error::GroundSetSize { n, max: MAX_CRITERIA });
        }
        Ok(GroundSet { n })
    }

    /// Ground set additionally capped for `3^n` tabulation.
    pub fn new_bi(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_BI_CRITERIA {
            return Err(Error::GroundSetSize { n, max: MAX_BI_CRITERIA });
        }
        Ok(GroundSet { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask(((1u32 << self.n) - 1) as u32)
    }

    pub fn subset_count(&self) -> usize {
        1 << self.n
    }

    pub fn pair_count(&self) -> usize {
        POW3[self.n]
    }

    /// 0-based criterion indices.
    pub fn criteria(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All subsets, in ascending mask order.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetMask> {
        (0..self.subset_count() as u32).map(SubsetMask)
    }

    /// All disjoint pairs, in base-3 index order.
    pub fn pairs(&self) -> impl Iterator<Item = BiSetPair> + '_ {
        let g = *self;
        (0..self.pair_count()).map(move |i| BiSetPair::from_index(i, &g))
    }

    pub fn require_same(&self, other: &GroundSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }
}

pub(crate) const POW3: [usize; 17] = {
    let mut t = [1usize; 17];
    let mut i = 1;
    while i < 17 {
        t[i] = t[i - 1] * 3;
        i += 1;
    }
    t
};

/// A subset of the ground set, encoded as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn singleton(i: usize) -> Self {
        SubsetMask(1 << i)
    }

    /// Build from 0-based criterion indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u32;
        for &i in indices {
            bits |= 1 << i;
        }
        SubsetMask(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersect(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn minus(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    pub fn insert(self, i: usize) -> SubsetMask {
        SubsetMask(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> SubsetMask {
        SubsetMask(self.0 & !(1 << i))
    }

    pub fn complement_in(self, ground: &GroundSet) -> SubsetMask {
        SubsetMask(ground.full_mask().0 & !self.0)
    }

    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// Set bit positions (0-based), ascending.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// All subsets of this mask, ascending, including `∅` and the mask itself.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf { mask: self.0, cur: 0, done: false }
    }

    /// 1-based criterion indices, sorted; the external representation.
    pub fn to_criteria(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

pub struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

pub struct SubsetsOf {
    mask: u32,
    cur: u32,
    done: bool,
}

impl Iterator for SubsetsOf {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        if self.done {
            return None;
        }
        let out = SubsetMask(self.cur);
        if self.cur == self.mask {
            self.done = true;
        } else {
            self.cur = (self.cur.wrapping_sub(self.mask)) & self.mask;
        }
        Some(out)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element `(A, B)` of `Q(N)`, the set of disjoint subset pairs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiSetPair {
    pos: SubsetMask,
    neg: SubsetMask,
}

impl BiSetPair {
    pub const EMPTY: BiSetPair = BiSetPair { pos: SubsetMask::EMPTY, neg: SubsetMask::EMPTY };

    pub fn new(pos: SubsetMask, neg: SubsetMask) -> Result<Self> {
        if !pos.is_disjoint(neg) {
            return Err(Error::NotDisjoint { pos, neg });
        }
        Ok(BiSetPair { pos, neg })
    }

    /// Caller guarantees disjointness (checked in debug builds).
    pub(crate) fn new_unchecked(pos: SubsetMask, neg: SubsetMask) -> Self {
        debug_assert!(pos.is_disjoint(neg));
        BiSetPair { pos, neg }
    }

    pub fn pos(self) -> SubsetMask {
        self.pos
    }

    pub fn neg(self) -> SubsetMask {
        self.neg
    }

    /// The order `(A,B) ⊑ (C,D) iff A ⊆ C and B ⊇ D`.
    pub fn leq(self, other: BiSetPair) -> bool {
        self.pos.is_subset_of(other.pos) && other.neg.is_subset_of(self.neg)
    }

    /// Base-3 position in the dense `3^n` table.
    pub fn index(self, ground: &GroundSet) -> usize {
        let mut idx = 0usize;
        for i in ground.criteria() {
            let digit = if self.pos.contains(i) {
                1
            } else if self.neg.contains(i) {
                2
            } else {
                0
            };
            idx += digit * POW3[i];
        }
        idx
    }

    pub fn from_index(mut idx: usize, ground: &GroundSet) -> BiSetPair {
        let mut pos = 0u32;
        let mut neg = 0u32;
        for i in ground.criteria() {
            match idx % 3 {
                1 => pos |= 1 << i,
                2 => neg |= 1 << i,
                _ => {}
            }
            idx /= 3;
        }
        BiSetPair { pos: SubsetMask(pos), neg: SubsetMask(neg) }
    }
}

impl fmt::Display for BiSetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pos, self.neg)
    }
}

impl fmt::Debug for BiSetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration_is_exhaustive_and_ordered() {
        let g = GroundSet::new(3).unwrap();
        let all: Vec<_> = g.subsets().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], SubsetMask::EMPTY);
        assert_eq!(all[7], g.full_mask());
    }

    #[test]
    fn subsets_of_mask() {
        let m = SubsetMask::from_indices(&[0, 2]);
        let subs: Vec<_> = m.subsets().collect();
        assert_eq!(subs.len(), 4);
        assert!(subs.contains(&SubsetMask::EMPTY));
        assert!(subs.contains(&m));
        assert!(subs.iter().all(|s| s.is_subset_of(m)));
    }

    #[test]
    fn pair_count_is_three_to_the_n() {
        for n in 1..=6 {
            let g = GroundSet::new(n).unwrap();
            let pairs: Vec<_> = g.pairs().collect();
            assert_eq!(pairs.len(), POW3[n]);
            assert!(pairs.iter().all(|p| p.pos().is_disjoint(p.neg())));
        }
    }

    #[test]
    fn pair_index_roundtrip() {
        let g = GroundSet::new(4).unwrap();
        for (i, p) in g.pairs().enumerate() {
            assert_eq!(p.index(&g), i);
            assert_eq!(BiSetPair::from_index(i, &g), p);
        }
    }

    #[test]
    fn pair_order() {
        let g = GroundSet::new(3).unwrap();
        let bottom = BiSetPair::new(SubsetMask::EMPTY, g.full_mask()).unwrap();
        let top = BiSetPair::new(g.full_mask(), SubsetMask::EMPTY).unwrap();
        for p in g.pairs() {
            assert!(bottom.leq(p));
            assert!(p.leq(top));
        }
    }

    #[test]
    fn overlapping_pair_rejected() {
        let a = SubsetMask::from_indices(&[0, 1]);
        let b = SubsetMask::from_indices(&[1]);
        assert!(BiSetPair::new(a, b).is_err());
    }

    #[test]
    fn ground_set_caps() {
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::new(17).is_err());
        assert!(GroundSet::new(16).is_ok());
        assert!(GroundSet::new_bi(13).is_err());
        assert!(GroundSet::new_bi(12).is_ok());
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(SubsetMask::from_indices(&[0, 2]).to_string(), "{1,3}");
    }
}
