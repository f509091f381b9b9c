//! Vertex sets.
//!
//! [`VertexSet`] is the public, growable set type. The solver and the search
//! work on a packed view of the adjacency rows instead: one `u64` per row when
//! the graph has at most 64 vertices, a fixed-width multi-word mask otherwise.
//! Both packed forms implement the crate-private [`Mask`] trait so the hot
//! loops are written once.

use std::fmt;

use serde::{Deserialize, Serialize};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// A set of vertex ids, stored as a little-endian bitmask.
///
/// Trailing zero words are never stored, so two sets compare equal exactly
/// when they contain the same vertices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / WORD];
        if !n.is_multiple_of(WORD) {
            words.push((1u64 << (n % WORD)) - 1);
        }
        Self { words }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn from_word(bits: u64) -> Self {
        let mut s = Self { words: vec![bits] };
        s.trim();
        s
    }

    pub(crate) fn from_words(words: Vec<u64>) -> Self {
        let mut s = Self { words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        self.trim();
        had
    }

    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        w < self.words.len() && self.words[w] >> b & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member plus one, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(&w) => (self.words.len() - 1) * WORD + (WORD - w.leading_zeros() as usize),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * WORD + b))
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (a, b) in words.iter_mut().zip(&short.words) {
            *a |= b;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_words(
            self.words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        )
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self::from_words(
            self.words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// The low 64 bits, if nothing is stored above them.
    pub fn as_word(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub(crate) fn to_mask<M: Mask>(&self, n: usize) -> M {
        let mut m = M::zeros(n);
        for v in self.iter().filter(|&v| v < n) {
            m.set(v);
        }
        m
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Formats as `{0,1,2}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        Ok(members.into_iter().collect())
    }
}

pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Fixed-capacity bitmask used by the packed algorithms.
pub(crate) trait Mask: Clone + Eq + Send + Sync {
    fn zeros(n: usize) -> Self;
    fn set(&mut self, i: usize);
    fn clear(&mut self, i: usize);
    fn get(&self, i: usize) -> bool;
    fn count(&self) -> u32;
    fn is_zero(&self) -> bool;
    fn and(&self, o: &Self) -> Self;
    fn or(&self, o: &Self) -> Self;
    fn and_not(&self, o: &Self) -> Self;
    fn and_count(&self, o: &Self) -> u32;
    fn first(&self) -> Option<usize>;
    fn ones(&self) -> impl Iterator<Item = usize> + '_;
    fn to_set(&self) -> VertexSet;

    fn full(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i);
        }
        m
    }

    fn is_subset(&self, o: &Self) -> bool {
        self.and_not(o).is_zero()
    }
}

impl Mask for u64 {
    #[inline]
    fn zeros(_: usize) -> Self {
        0
    }
    #[inline]
    fn full(n: usize) -> Self {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }
    #[inline]
    fn set(&mut self, i: usize) {
        *self |= 1 << i;
    }
    #[inline]
    fn clear(&mut self, i: usize) {
        *self &= !(1 << i);
    }
    #[inline]
    fn get(&self, i: usize) -> bool {
        *self >> i & 1 == 1
    }
    #[inline]
    fn count(&self) -> u32 {
        self.count_ones()
    }
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn and(&self, o: &Self) -> Self {
        self & o
    }
    #[inline]
    fn or(&self, o: &Self) -> Self {
        self | o
    }
    #[inline]
    fn and_not(&self, o: &Self) -> Self {
        self & !o
    }
    #[inline]
    fn and_count(&self, o: &Self) -> u32 {
        (self & o).count_ones()
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(*self)
    }
    fn to_set(&self) -> VertexSet {
        VertexSet::from_word(*self)
    }
}

/// Multi-word mask for graphs with more than 64 vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct WideMask(Box<[u64]>);

impl WideMask {
    fn zip_map(&self, o: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        WideMask(
            self.0
                .iter()
                .zip(o.0.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

impl Mask for WideMask {
    fn zeros(n: usize) -> Self {
        WideMask(vec![0; words_for(n)].into_boxed_slice())
    }
    fn set(&mut self, i: usize) {
        self.0[i / WORD] |= 1 << (i % WORD);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / WORD] &= !(1 << (i % WORD));
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / WORD] >> (i % WORD) & 1 == 1
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn and(&self, o: &Self) -> Self {
        self.zip_map(o, |a, b| a & b)
    }
    fn or(&self, o: &Self) -> Self {
        self.zip_map(o, |a, b| a | b)
    }
    fn and_not(&self, o: &Self) -> Self {
        self.zip_map(o, |a, b| a & !b)
    }
    fn and_count(&self, o: &Self) -> u32 {
        self.0
            .iter()
            .zip(o.0.iter())
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * WORD + b))
    }
    fn to_set(&self) -> VertexSet {
        VertexSet::from_words(self.0.to_vec())
    }
}
