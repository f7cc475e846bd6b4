//! Fixed-width sentence sets.
//!
//! A [`SentenceSet`] is a subset of the positions `{0, …, |L|−1}` of one
//! language, stored as a bit vector.  The width travels with the set, so
//! complements are always taken relative to the right universe and mixing
//! sets from different languages is caught early.

use std::fmt;

use smallvec::SmallVec;

use crate::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn word_count(width: usize) -> usize {
    width.div_ceil(WORD_BITS)
}

/// Subset of a language of `width` sentences, one bit per sentence index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SentenceSet {
    width: u32,
    words: SmallVec<[u64; 1]>,
}

impl SentenceSet {
    /// The empty set over a language of `width` sentences.
    pub fn empty(width: usize) -> Self {
        SentenceSet {
            width: width as u32,
            words: SmallVec::from_elem(0, word_count(width)),
        }
    }

    /// The full set `L` over a language of `width` sentences.
    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn singleton(width: usize, index: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(index);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut s = Self::empty(width);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds a set over `width ≤ 64` sentences from a plain bit mask.
    pub fn from_mask(width: usize, mask: u64) -> Self {
        debug_assert!(width <= WORD_BITS);
        let mut s = Self::empty(width);
        s.words[0] = mask;
        s.trim();
        s
    }

    /// The low 64 bits of the set; the whole set when `width ≤ 64`.
    pub fn mask(&self) -> u64 {
        self.words[0]
    }

    /// Number of sentences in the underlying language.
    pub fn width(&self) -> usize {
        self.width as usize
    }

    fn trim(&mut self) {
        let width = self.width as usize;
        if width % WORD_BITS != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << (width % WORD_BITS)) - 1;
            }
        }
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < self.width as usize);
        self.words[index / WORD_BITS] |= 1u64 << (index % WORD_BITS);
    }

    pub fn remove(&mut self, index: usize) {
        debug_assert!(index < self.width as usize);
        self.words[index / WORD_BITS] &= !(1u64 << (index % WORD_BITS));
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.width as usize && self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.width as usize)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn check_width(&self, other: &Self) -> Result<()> {
        if self.width == other.width {
            Ok(())
        } else {
            Err(Error::WidthMismatch(
                self.width as usize,
                other.width as usize,
            ))
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        out
    }

    /// `L \ self` — the paper's overline.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn with(&self, index: usize) -> Self {
        let mut out = self.clone();
        out.insert(index);
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words.iter().zip(&other.words).all(|(w, o)| w & o == 0)
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        !self.is_disjoint_from(other)
    }

    /// Ascending member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let width = self.width as usize;
        (0..width).filter(move |i| self.contains(*i))
    }

    /// Smallest member index, if any.
    pub fn min_index(&self) -> Option<usize> {
        for (k, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(k * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// All subsets of `self`, smallest-mask first.  Width must be ≤ 64.
    pub fn subsets(&self) -> SubsetIter {
        assert!(
            self.width as usize <= WORD_BITS,
            "subset enumeration requires width <= 64"
        );
        SubsetIter {
            mask: self.words[0],
            next: Some(0),
            width: self.width as usize,
        }
    }
}

/// Iterates every submask of a mask in increasing numeric order.
pub struct SubsetIter {
    mask: u64,
    next: Option<u64>,
    width: usize,
}

impl Iterator for SubsetIter {
    type Item = SentenceSet;

    fn next(&mut self) -> Option<SentenceSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(SentenceSet::from_mask(self.width, cur))
    }
}

impl PartialOrd for SentenceSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SentenceSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Debug for SentenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
