use std::fmt;
use std::hash::Hash;

/// A set of vertex indices, stored as 64-bit words with no trailing zero
/// words (so equal sets compare and hash equal regardless of history).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet::default()
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> VertexSet {
        let mut words = vec![u64::MAX; n / 64];
        if n % 64 != 0 {
            words.push((1u64 << (n % 64)) - 1);
        }
        VertexSet { words }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> VertexSet {
        let mut s = VertexSet::new();
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn from_words(words: &[u64]) -> VertexSet {
        let mut s = VertexSet { words: words.to_vec() };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn insert(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / 64) {
            *w &= !(1 << (i % 64));
            self.trim();
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first_index(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        ones(&self.words)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = VertexSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = VertexSet {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.difference(other).is_empty()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter)
    }
}

fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

/// Set operations the evaluator needs; implemented by a bare `u64` for
/// graphs with at most 64 vertices and by [`VertexSet`] beyond that.
pub(crate) trait Mask: Clone + Eq + Hash + Send + Sync {
    fn from_set(set: &VertexSet) -> Self;
    fn empty() -> Self;
    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;
    fn is_empty(&self) -> bool;
    fn count(&self) -> usize;
    fn first(&self) -> Option<usize>;
    fn indices(&self) -> Vec<usize>;
}

impl Mask for u64 {
    fn from_set(set: &VertexSet) -> u64 {
        debug_assert!(set.words.len() <= 1);
        set.words.first().copied().unwrap_or(0)
    }
    fn empty() -> u64 {
        0
    }
    fn and(&self, other: &u64) -> u64 {
        self & other
    }
    fn and_not(&self, other: &u64) -> u64 {
        self & !other
    }
    fn or(&self, other: &u64) -> u64 {
        self | other
    }
    fn is_empty(&self) -> bool {
        *self == 0
    }
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    fn indices(&self) -> Vec<usize> {
        ones(std::slice::from_ref(self)).collect()
    }
}

impl Mask for VertexSet {
    fn from_set(set: &VertexSet) -> VertexSet {
        set.clone()
    }
    fn empty() -> VertexSet {
        VertexSet::new()
    }
    fn and(&self, other: &VertexSet) -> VertexSet {
        self.intersection(other)
    }
    fn and_not(&self, other: &VertexSet) -> VertexSet {
        self.difference(other)
    }
    fn or(&self, other: &VertexSet) -> VertexSet {
        self.union(other)
    }
    fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn first(&self) -> Option<usize> {
        self.iter().next()
    }
    fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
