use std::fmt;

/// Largest poset supported by the fixed-width [`ElementSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A subset of poset elements `0..d`, stored as a 64-bit mask.
///
/// Ordering is by the mask value, so sorting a list of sets gives the
/// canonical enumeration order. If `a ⊂ b` then `a < b`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_ELEMENTS);
        ElementSet(1 << i)
    }

    /// The full set `{0, .., d-1}`.
    #[inline]
    pub fn full(d: usize) -> Self {
        debug_assert!(d <= MAX_ELEMENTS);
        if d == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << d) - 1)
        }
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | 1 << i)
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
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Self) -> Self {
        ElementSet(self.0 ^ other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Strict inclusion.
    #[inline]
    pub fn is_proper_subset(self, other: Self) -> bool {
        self != other && self.is_subset(other)
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, in ascending mask order (including `∅` and `self`).
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElementSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Serialized as the ascending list of members.
impl serde::Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
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

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        // Standard "next submask in increasing order" step.
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a: ElementSet = [0, 2, 3].into_iter().collect();
        let b: ElementSet = [2, 4].into_iter().collect();
        assert_eq!(a.union(b), [0, 2, 3, 4].into_iter().collect());
        assert_eq!(a.intersection(b), ElementSet::singleton(2));
        assert_eq!(a.difference(b), [0, 3].into_iter().collect());
        assert_eq!(a.symmetric_difference(b), [0, 3, 4].into_iter().collect());
        assert!(ElementSet::singleton(2).is_proper_subset(a));
        assert!(!a.is_proper_subset(a));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 3]);
        assert_eq!(a.to_string(), "{0,2,3}");
    }

    #[test]
    fn full_set_at_capacity() {
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::full(3).bits(), 0b111);
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
    }

    #[test]
    fn subsets_ascending_and_complete() {
        let s: ElementSet = [1, 3, 4].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn subset_order_is_compatible_with_inclusion() {
        let s: ElementSet = [0, 1, 2, 3].into_iter().collect();
        for a in s.subsets() {
            for b in s.subsets() {
                if a.is_proper_subset(b) {
                    assert!(a < b);
                }
            }
        }
    }
}
