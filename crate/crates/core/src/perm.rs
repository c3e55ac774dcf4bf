//! Permutations of the ground set, used both as bingo calling orders and as
//! candidate matroid automorphisms.

use crate::error::Error;
use crate::set::{ElementId, ElementSet};
use std::fmt;

/// A bijection on `{1, ..., n}`, stored as the image sequence: `order[k]` is
/// the element in position `k + 1` (for calling orders, the `k+1`-st ball).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    order: Vec<ElementId>,
}

impl Permutation {
    /// Validates that every element of `1..=n` appears exactly once.
    pub fn new(order: Vec<ElementId>) -> Result<Self, Error> {
        let n = order.len();
        let mut seen = ElementSet::EMPTY;
        for &e in &order {
            if e.index() > n {
                return Err(Error::InvalidPermutation(format!(
                    "element {e} out of range 1..={n}"
                )));
            }
            if seen.contains(e) {
                return Err(Error::InvalidPermutation(format!("element {e} repeated")));
            }
            seen = seen.with(e);
        }
        Ok(Permutation { order })
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self, Error> {
        let order = indices
            .iter()
            .map(|&i| {
                ElementId::new(i)
                    .ok_or_else(|| Error::InvalidPermutation(format!("bad element index {i}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(order)
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            order: (1..=n).map(|i| ElementId::new(i).unwrap()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Image sequence, position by position.
    pub fn order(&self) -> &[ElementId] {
        &self.order
    }

    /// The element mapped to by `e` when the permutation is read as the
    /// function `k -> order[k - 1]`.
    pub fn image(&self, e: ElementId) -> ElementId {
        self.order[e.index() - 1]
    }

    /// Applies the permutation element-wise to a set.
    pub fn apply(&self, s: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for e in s.iter() {
            out = out.with(self.image(e));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.order.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Calls `visit` on every permutation of `1..=n` (Heap's algorithm). The
/// slice handed to the callback is reused between calls.
pub fn for_each_permutation<F: FnMut(&[ElementId])>(n: usize, mut visit: F) {
    let mut items: Vec<ElementId> = (1..=n).map(|i| ElementId::new(i).unwrap()).collect();
    if n == 0 {
        visit(&items);
        return;
    }
    let mut c = vec![0usize; n];
    visit(&items);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(&items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_repeats_and_range() {
        assert!(Permutation::from_indices(&[1, 1, 3]).is_err());
        assert!(Permutation::from_indices(&[1, 2, 4]).is_err());
        assert!(Permutation::from_indices(&[3, 1, 2]).is_ok());
    }

    #[test]
    fn apply_maps_sets() {
        let p = Permutation::from_indices(&[2, 3, 1]).unwrap();
        let s = ElementSet::from_indices([1, 3]).unwrap();
        assert_eq!(p.apply(s).indices(), vec![1, 2]);
    }

    #[test]
    fn heap_visits_all_orders() {
        let mut seen = std::collections::HashSet::new();
        for_each_permutation(4, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }
}
