//! Fixed-width vertex sets.
//!
//! Every graph in this crate has at most [`MAX_VERTICES`](crate::MAX_VERTICES)
//! vertices, so a set is a plain array of eight words. Sets are `Copy` and all
//! binary operations are word-parallel.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const WORDS: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= WORDS * 64);
        let mut s = Self::new();
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    /// Complement within `{0, .., n-1}`.
    pub fn complement(&self, n: usize) -> Self {
        VertexSet::full(n) - *self
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            idx: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    idx: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.idx < WORDS {
            let w = self.words[self.idx];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.idx] &= w - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
        }
        None
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $tra:ident, $fa:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            #[allow(clippy::assign_op_pattern)]
            fn $f(mut self, rhs: VertexSet) -> VertexSet {
                for i in 0..WORDS {
                    self.words[i] = self.words[i] $op rhs.words[i];
                }
                self
            }
        }
        impl $tr<&VertexSet> for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: &VertexSet) -> VertexSet {
                self $op *rhs
            }
        }
        impl $tra for VertexSet {
            #[inline]
            fn $fa(&mut self, rhs: VertexSet) {
                *self = *self $op rhs;
            }
        }
        impl $tra<&VertexSet> for VertexSet {
            #[inline]
            fn $fa(&mut self, rhs: &VertexSet) {
                *self = *self $op *rhs;
            }
        }
    };
}

binop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
binop!(BitOr, bitor, BitOrAssign, bitor_assign, |);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        for i in 0..WORDS {
            self.words[i] &= !rhs.words[i];
        }
        self
    }
}

impl Sub<&VertexSet> for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: &VertexSet) -> VertexSet {
        self - *rhs
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        *self = *self - rhs;
    }
}

impl SubAssign<&VertexSet> for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: &VertexSet) {
        *self = *self - *rhs;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= WORDS * 64) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(512).len(), 512);
        let s: VertexSet = [1, 3, 100].iter().collect();
        let c = s.complement(101);
        assert_eq!(c.len(), 98);
        assert!(!c.contains(100));
        assert!(c.contains(99));
    }

    #[test]
    fn iteration_is_ascending() {
        let s: VertexSet = [511, 0, 63, 64, 200].iter().collect();
        assert_eq!(s.to_vec(), vec![0, 63, 64, 200, 511]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(VertexSet::new().first(), None);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 2, 3].iter().collect();
        let b: VertexSet = [3, 4].iter().collect();
        assert_eq!((a & b).to_vec(), vec![3]);
        assert_eq!((a | b).len(), 4);
        assert_eq!((a - b).to_vec(), vec![1, 2]);
        assert!(a.intersects(&b));
        assert!((a & b).is_subset(&a));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn serde_roundtrip() {
        let s: VertexSet = [5, 70].iter().collect();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, "[5,70]");
        let back: VertexSet = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[600]").is_err());
    }
}
