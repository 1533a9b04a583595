//! Bit-mask subsets of a finite point set `{0, .., n-1}` with `n <= 64`.

use std::fmt;

/// Largest number of points a [`PointSet`] can address.
pub const MAX_POINTS: usize = 64;

/// A subset of `{0, .., n-1}` stored as a 64-bit mask.
///
/// The ambient size lives with the owning space; a `PointSet` by itself only
/// knows its members. Ordering is the numeric order of the mask, which is the
/// canonical order used for open-set families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < MAX_POINTS);
        PointSet(1u64 << x)
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        x < MAX_POINTS && self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    #[inline]
    pub fn with(self, x: usize) -> Self {
        PointSet(self.0 | 1u64 << x)
    }

    #[inline]
    pub fn without(self, x: usize) -> Self {
        PointSet(self.0 & !(1u64 << x))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// True when every member is `< n`.
    #[inline]
    pub fn within(self, n: usize) -> bool {
        self.is_subset(PointSet::full(n))
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// All subsets of `self`, starting with the empty set and ending with
    /// `self`, in increasing numeric order.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }

    /// Image of this set under a point function.
    pub fn image(self, map: &[usize]) -> Self {
        self.iter().fold(PointSet::EMPTY, |acc, x| acc.with(map[x]))
    }

    /// `{ z : map[z] in self }`.
    pub fn preimage(self, map: &[usize]) -> Self {
        map.iter().enumerate().filter(|&(_, &x)| self.contains(x)).fold(PointSet::EMPTY, |acc, (z, _)| acc.with(z))
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(PointSet::EMPTY, PointSet::with)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formats as the DSL does: `{0 2 3}`, `{}` for the empty set.
impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug)]
pub struct Points(u64);

impl Iterator for Points {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

/// Submask enumeration in increasing order.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask above `cur`
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(PointSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a: PointSet = [0, 2].into_iter().collect();
        let b: PointSet = [2, 3].into_iter().collect();
        assert_eq!(a.union(b).iter().collect::<Vec<_>>(), vec![0, 2, 3]);
        assert_eq!(a.intersection(b), PointSet::singleton(2));
        assert_eq!(a.difference(b), PointSet::singleton(0));
        assert_eq!(a.complement(4), [1, 3].into_iter().collect());
        assert!(PointSet::EMPTY.is_subset(a));
        assert!(!a.is_subset(b));
        assert_eq!(PointSet::full(64).len(), 64);
        assert_eq!(PointSet::full(0), PointSet::EMPTY);
    }

    #[test]
    fn subsets_are_all_submasks_in_order() {
        let s: PointSet = [1, 3, 4].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn image_and_preimage() {
        let map = [1, 1, 0];
        assert_eq!(PointSet::singleton(1).preimage(&map), [0, 1].into_iter().collect());
        assert_eq!(PointSet::full(3).image(&map), PointSet::full(2));
    }

    #[test]
    fn display_matches_dsl() {
        assert_eq!(PointSet::EMPTY.to_string(), "{}");
        assert_eq!(PointSet::from_bits(0b1011).to_string(), "{0 1 3}");
    }
}
