//! Ground-set elements and bitset subsets.
//!
//! A matroid here lives on the ground set `{1, ..., n}` with `n <= 64`, so a
//! subset fits in one machine word. Bit `i - 1` of the mask represents
//! element `i`.

use std::fmt;

/// Hard capacity of the ground set: one `u64` word.
pub const MAX_ELEMENTS: usize = 64;

/// A single ground-set element, labeled `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u8);

impl ElementId {
    /// Returns `None` unless `1 <= index <= 64`.
    pub fn new(index: usize) -> Option<Self> {
        if (1..=MAX_ELEMENTS).contains(&index) {
            Some(ElementId(index as u8))
        } else {
            None
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A subset of the ground set, stored as a 64-bit mask.
///
/// The derived order is *not* element-wise; see [`ElementSet::cmp`]: sets
/// compare by cardinality first and mask value second, which is exactly the
/// canonical circuit order used throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// The full set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: ElementId) -> Self {
        ElementSet(1u64 << (e.0 - 1))
    }

    /// Builds a set from 1-based element indices; `None` if any is out of
    /// `1..=64`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Option<Self> {
        let mut mask = 0u64;
        for i in indices {
            let e = ElementId::new(i)?;
            mask |= 1u64 << (e.0 - 1);
        }
        Some(ElementSet(mask))
    }

    pub fn from_bits(mask: u64) -> Self {
        ElementSet(mask)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: ElementId) -> bool {
        self.0 & (1u64 << (e.0 - 1)) != 0
    }

    pub fn is_subset_of(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & !other.0)
    }

    pub fn with(self, e: ElementId) -> ElementSet {
        ElementSet(self.0 | (1u64 << (e.0 - 1)))
    }

    pub fn without(self, e: ElementId) -> ElementSet {
        ElementSet(self.0 & !(1u64 << (e.0 - 1)))
    }

    /// Elements in ascending order.
    pub fn iter(self) -> ElementIter {
        ElementIter(self.0)
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<ElementId> {
        if self.0 == 0 {
            None
        } else {
            Some(ElementId(self.0.trailing_zeros() as u8 + 1))
        }
    }

    /// 1-based element indices, ascending.
    pub fn indices(self) -> Vec<usize> {
        self.iter().map(ElementId::index).collect()
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    /// Canonical circuit order: cardinality-major, mask-minor.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }
}

pub struct ElementIter(u64);

impl Iterator for ElementIter {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(ElementId(tz as u8 + 1))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterates all `k`-element subsets of `{1..n}` as masks, in ascending mask
/// order (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> SubsetIter {
    assert!(n <= MAX_ELEMENTS);
    if k > n {
        return SubsetIter { cur: 0, limit: 0, done: true };
    }
    let limit = ElementSet::full(n).bits();
    let first = if k == 0 {
        0
    } else if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    };
    SubsetIter { cur: first, limit, done: false }
}

pub struct SubsetIter {
    cur: u64,
    limit: u64,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if out > self.limit {
            self.done = true;
            return None;
        }
        if out == 0 {
            self.done = true;
            return Some(ElementSet(0));
        }
        // Gosper: next mask with the same popcount.
        let c = out & out.wrapping_neg();
        let r = out.wrapping_add(c);
        if r == 0 {
            self.done = true;
        } else {
            self.cur = (((r ^ out) >> 2) / c) | r;
        }
        Some(ElementSet(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> ElementSet {
        ElementSet::from_indices(ix.iter().copied()).unwrap()
    }

    #[test]
    fn basic_ops() {
        let s = set(&[1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(ElementId::new(3).unwrap()));
        assert!(!s.contains(ElementId::new(2).unwrap()));
        assert_eq!(s.indices(), vec![1, 3, 5]);
        assert_eq!(s.to_string(), "{1,3,5}");
        assert!(set(&[1, 3]).is_subset_of(s));
        assert!(!set(&[1, 2]).is_subset_of(s));
    }

    #[test]
    fn canonical_order_is_size_then_mask() {
        let mut v = vec![set(&[2, 3]), set(&[4]), set(&[1, 2, 3]), set(&[1, 3])];
        v.sort();
        assert_eq!(v, vec![set(&[4]), set(&[1, 3]), set(&[2, 3]), set(&[1, 2, 3])]);
    }

    #[test]
    fn full_set_boundaries() {
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert!(ElementId::new(0).is_none());
        assert!(ElementId::new(65).is_none());
    }

    #[test]
    fn gosper_enumerates_all_k_subsets() {
        let subs: Vec<_> = subsets_of_size(5, 3).collect();
        assert_eq!(subs.len(), 10);
        assert!(subs.iter().all(|s| s.len() == 3));
        let zero: Vec<_> = subsets_of_size(4, 0).collect();
        assert_eq!(zero, vec![ElementSet::EMPTY]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(64, 1).count(), 64);
    }
}
