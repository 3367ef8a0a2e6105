//! Fixed-width vertex sets.
//!
//! [`VertexSet`] is a 512-bit set, stored as eight 64-bit words, sized to the
//! crate-wide vertex cap. It is `Copy`, so branch-and-bound search states can
//! be duplicated with a memcpy and no allocation. All operations are plain
//! word-parallel bit arithmetic.
//!
//! A set does not know the order `n` of the graph it belongs to; operations
//! that need the universe (like [`VertexSet::complement_within`]) take `n`
//! explicitly and mask the result.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

/// Number of 64-bit words in a set.
const WORDS: usize = 8;

/// Maximum number of vertices representable (and the crate-wide cap on graph
/// order).
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertex indices in `0..512`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    /// Set containing all of `0..n`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        let mut s = VertexSet::EMPTY;
        let full_words = n / 64;
        for w in 0..full_words {
            s.words[w] = u64::MAX;
        }
        if n % 64 != 0 {
            s.words[full_words] = (1u64 << (n % 64)) - 1;
        }
        s
    }

    /// Set containing a single vertex.
    pub fn singleton(v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        s.insert(v);
        s
    }

    /// Number of vertices in the set.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when no vertex is present.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Membership test.
    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Add a vertex.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    /// Remove a vertex.
    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    /// Returning variants of insert/remove, convenient in search code.
    #[inline]
    pub fn with(mut self, v: usize) -> VertexSet {
        self.insert(v);
        self
    }

    #[inline]
    pub fn without(mut self, v: usize) -> VertexSet {
        self.remove(v);
        self
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Largest vertex in the set, if any.
    pub fn max(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    /// Remove and return the smallest vertex.
    #[inline]
    pub fn pop_min(&mut self) -> Option<usize> {
        let v = self.min()?;
        self.remove(v);
        Some(v)
    }

    /// All vertices strictly greater than `v`.
    pub fn above(&self, v: usize) -> VertexSet {
        let mut s = *self;
        let word = v / 64;
        for w in 0..word {
            s.words[w] = 0;
        }
        // Clear bits 0..=v%64 of the boundary word.
        let keep_from = v % 64 + 1;
        s.words[word] &= if keep_from == 64 { 0 } else { u64::MAX << keep_from };
        s
    }

    /// Subset test: `self ⊆ other`.
    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    /// Disjointness test.
    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & b == 0)
    }

    /// Complement relative to the universe `{0..n-1}`.
    pub fn complement_within(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::full(n);
        for (w, &m) in s.words.iter_mut().zip(&self.words) {
            *w &= !m;
        }
        s
    }

    /// Compare two sets as ascending vertex lists, lexicographically.
    ///
    /// This is the tie-break order used for solver witnesses: the first
    /// position where the sorted lists differ decides, and a strict prefix
    /// precedes its extensions. For equal-size sets this coincides with
    /// "the set owning the smallest element of the symmetric difference is
    /// smaller".
    pub fn lex_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        for i in 0..WORDS {
            let diff = self.words[i] ^ other.words[i];
            if diff != 0 {
                let m = i * 64 + diff.trailing_zeros() as usize;
                // Everything below m is shared; the lists agree up to that
                // point. The side holding m has the smaller entry at the
                // first differing position — unless the other side has
                // nothing ≥ m, in which case it is a strict prefix and
                // precedes.
                return if self.contains(m) {
                    if other.above(m).is_empty() {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                } else if self.above(m).is_empty() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Iter {
        Iter { set: *self }
    }

    /// Members as a sorted `Vec<usize>`.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
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

/// Ascending iterator over set members.
pub struct Iter {
    set: VertexSet,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        self.set.pop_min()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.set.len();
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        Iter { set: self }
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        Iter { set: *self }
    }
}

macro_rules! bitop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident, $op:tt) => {
        impl $trait for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $method(mut self, rhs: VertexSet) -> VertexSet {
                self.$assign_method(rhs);
                self
            }
        }
        impl $assign_trait for VertexSet {
            #[inline]
            fn $assign_method(&mut self, rhs: VertexSet) {
                for i in 0..WORDS {
                    self.words[i] = self.words[i] $op rhs.words[i];
                }
            }
        }
    };
}

bitop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
bitop!(BitOr, bitor, BitOrAssign, bitor_assign, |);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        self -= rhs;
        self
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        for i in 0..WORDS {
            self.words[i] &= !rhs.words[i];
        }
    }
}

macro_rules! fmt_set {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{{")?;
            for (i, v) in self.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")
        }
    };
}

impl fmt::Debug for VertexSet {
    fmt_set!();
}

impl fmt::Display for VertexSet {
    fmt_set!();
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    #[test]
    fn insert_contains_remove() {
        let mut s = VertexSet::EMPTY;
        assert!(s.is_empty());
        for v in [0, 63, 64, 127, 511] {
            s.insert(v);
            assert!(s.contains(v));
        }
        assert_eq!(s.len(), 5);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.to_vec(), vec![0, 63, 127, 511]);
    }

    #[test]
    fn full_and_complement() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.contains(69) && !s.contains(70));
        let c = VertexSet::singleton(3).complement_within(70);
        assert_eq!(c.len(), 69);
        assert!(!c.contains(3) && c.contains(69));
    }

    #[test]
    fn above_clears_low_bits() {
        let s: VertexSet = [1, 5, 64, 65, 200].into_iter().collect();
        assert_eq!(s.above(5).to_vec(), vec![64, 65, 200]);
        assert_eq!(s.above(64).to_vec(), vec![65, 200]);
        assert_eq!(s.above(0).to_vec(), vec![1, 5, 64, 65, 200]);
        assert_eq!(s.above(511).to_vec(), Vec::<usize>::new());
    }

    #[test]
    fn min_max_pop() {
        let mut s: VertexSet = [7, 100, 3].into_iter().collect();
        assert_eq!(s.min(), Some(3));
        assert_eq!(s.max(), Some(100));
        assert_eq!(s.pop_min(), Some(3));
        assert_eq!(s.pop_min(), Some(7));
        assert_eq!(s.pop_min(), Some(100));
        assert_eq!(s.pop_min(), None);
    }

    #[test]
    fn lex_order_matches_sorted_list_order() {
        let sets: Vec<Vec<usize>> = vec![
            vec![],
            vec![0],
            vec![0, 1],
            vec![0, 1, 2],
            vec![0, 2],
            vec![0, 64],
            vec![1],
            vec![1, 2],
            vec![2],
        ];
        // The list above is sorted in list-lexicographic order; lex_cmp must
        // agree pairwise.
        for i in 0..sets.len() {
            for j in 0..sets.len() {
                let a: VertexSet = sets[i].iter().copied().collect();
                let b: VertexSet = sets[j].iter().copied().collect();
                let expect = i.cmp(&j);
                assert_eq!(a.lex_cmp(&b), expect, "{:?} vs {:?}", sets[i], sets[j]);
            }
        }
        assert_eq!(
            VertexSet::singleton(5).lex_cmp(&VertexSet::singleton(5)),
            Ordering::Equal
        );
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 2, 3].into_iter().collect();
        let b: VertexSet = [3, 4].into_iter().collect();
        assert_eq!((a | b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!((a & b).to_vec(), vec![3]);
        assert_eq!((a - b).to_vec(), vec![1, 2]);
        assert!(VertexSet::EMPTY.is_subset(&a));
        assert!((a & b).is_subset(&b));
        assert!(!a.is_disjoint(&b));
        assert!((a - b).is_disjoint(&b));
    }
}
