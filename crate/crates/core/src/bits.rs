//! Fixed-width element sets.
//!
//! Every carrier in this crate has at most [`MAX_CARRIER`] elements, so a
//! subset of a carrier is a single `u128` mask. Element `i` is bit `i`.

use std::fmt;

/// Hard upper bound on the size of any ring or module carrier.
pub const MAX_CARRIER: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Bits(pub u128);

impl Bits {
    pub const EMPTY: Bits = Bits(0);

    pub fn single(i: usize) -> Bits {
        Bits(1u128 << i)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Bits {
        if n >= 128 {
            Bits(u128::MAX)
        } else {
            Bits((1u128 << n) - 1)
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(items: I) -> Bits {
        let mut b = Bits::EMPTY;
        for i in items {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_subset(self, other: Bits) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Bits) -> Bits {
        Bits(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Bits) -> Bits {
        Bits(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Bits) -> Bits {
        Bits(self.0 & !other.0)
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitsIter {
        BitsIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitsIter(u128);

impl Iterator for BitsIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitsIter {}

impl IntoIterator for Bits {
    type Item = usize;
    type IntoIter = BitsIter;

    fn into_iter(self) -> BitsIter {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = Bits::from_iter([0, 2, 4]);
        let b = Bits::from_iter([2, 3]);
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.difference(b).to_vec(), vec![0, 4]);
        assert!(Bits::single(2).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(a.len(), 3);
        assert_eq!(a.min(), Some(0));
        assert_eq!(Bits::EMPTY.min(), None);
    }

    #[test]
    fn full_edges() {
        assert_eq!(Bits::full(0), Bits::EMPTY);
        assert_eq!(Bits::full(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(Bits::full(128).len(), 128);
        assert!(Bits::full(128).contains(127));
    }
}
