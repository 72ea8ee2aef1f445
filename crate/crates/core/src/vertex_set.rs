//! Fixed-width vertex sets packed into a single machine word.
//!
//! A [`VertexSet`] carries no width of its own: the owning graph's order
//! supplies it wherever complements are taken. Every graph in this crate has
//! at most [`MAX_ORDER`] vertices.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported graph order (one `u64` per adjacency row).
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// The single member of a one-element set.
    #[inline]
    pub const fn only(self) -> Option<usize> {
        if self.0 != 0 && self.0 & (self.0 - 1) == 0 {
            Some(self.0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Shifts every member up by `offset` (used when relabeling the second
    /// operand of a union or join).
    #[inline]
    pub const fn shifted(self, offset: usize) -> Self {
        if offset >= 64 {
            VertexSet(0)
        } else {
            VertexSet(self.0 << offset)
        }
    }

    /// Enumeration order: cardinality first, then lexicographic on the
    /// sorted member lists.
    pub fn enumeration_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// All subsets of `{0, .., n-1}` with exactly `k` members, in increasing
/// numeric order (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= 63, "subset enumeration limited to 63 vertices");
    let limit = 1u64 << n;
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nx = (((r ^ cur) >> 2) / c) | r;
            (nx < limit).then_some(nx)
        };
        Some(VertexSet(cur))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a = VertexSet::from([0, 2, 5]);
        let b = VertexSet::from([2, 3]);
        assert_eq!(a.union(b), VertexSet::from([0, 2, 3, 5]));
        assert_eq!(a.intersection(b), VertexSet::from([2]));
        assert_eq!(a.difference(b), VertexSet::from([0, 5]));
        assert_eq!(a.complement(6), VertexSet::from([1, 3, 4]));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::EMPTY.complement(0), VertexSet::EMPTY);
        assert_eq!(b.only(), None);
        assert_eq!(VertexSet::singleton(7).only(), Some(7));
        assert_eq!(a.to_vec(), vec![0, 2, 5]);
        assert_eq!(a.to_string(), "{0,2,5}");
    }

    #[test]
    fn fixed_size_subsets_are_complete() {
        for n in 0..=8 {
            for k in 0..=n + 1 {
                let subs: Vec<_> = subsets_of_size(n, k).collect();
                let expected = (0..1u64 << n)
                    .filter(|x| x.count_ones() as usize == k)
                    .count();
                assert_eq!(subs.len(), expected, "n={n} k={k}");
                assert!(subs
                    .iter()
                    .all(|s| s.len() == k && s.is_subset(VertexSet::full(n))));
            }
        }
    }

    #[test]
    fn enumeration_order_is_size_then_lex() {
        let mut sets = [
            VertexSet::from([1, 2]),
            VertexSet::from([0, 3]),
            VertexSet::from([4]),
            VertexSet::from([0, 1]),
        ];
        sets.sort_by(VertexSet::enumeration_cmp);
        let lists: Vec<_> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(lists, vec![vec![4], vec![0, 1], vec![0, 3], vec![1, 2]]);
    }
}
