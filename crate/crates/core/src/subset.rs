//! Edge subsets of `[n]` as 64-bit masks.
//!
//! Edge `i` (1-based, as displayed) lives at bit `i - 1`. Subsets order
//! lexicographically on their sorted index lists (`{} < {1} < {1,2} < {2}`),
//! which is the order used for every listing and golden file.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest ground set an [`EdgeSubset`] can describe.
pub const MAX_EDGES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub const fn from_bits(bits: u64) -> Self {
        EdgeSubset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All of `[n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_EDGES, "ground set of {n} edges exceeds {MAX_EDGES}");
        if n == MAX_EDGES {
            EdgeSubset(u64::MAX)
        } else {
            EdgeSubset((1u64 << n) - 1)
        }
    }

    /// Builds a subset from 1-based edge indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!((1..=MAX_EDGES).contains(&i), "edge index {i} out of range");
            bits |= 1 << (i - 1);
        }
        EdgeSubset(bits)
    }

    pub fn singleton(i: usize) -> Self {
        Self::from_indices([i])
    }

    /// 1-based membership test.
    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_EDGES).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    /// 0-based membership test.
    #[inline]
    pub fn has_bit(self, bit: usize) -> bool {
        self.0 >> bit & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: EdgeSubset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Whether only bits `1..=n` are set.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(EdgeSubset::full(n))
    }

    pub fn union(self, other: EdgeSubset) -> Self {
        EdgeSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSubset) -> Self {
        EdgeSubset(self.0 & other.0)
    }

    pub fn difference(self, other: EdgeSubset) -> Self {
        EdgeSubset(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: EdgeSubset) -> Self {
        EdgeSubset(self.0 ^ other.0)
    }

    pub fn insert(&mut self, i: usize) {
        *self = self.union(EdgeSubset::singleton(i));
    }

    pub fn remove(&mut self, i: usize) {
        *self = self.difference(EdgeSubset::singleton(i));
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    /// Iterates over every subset of `[n]` in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = EdgeSubset> {
        assert!(n < MAX_EDGES, "cannot enumerate all subsets of {n} edges");
        (0..1u64 << n).map(EdgeSubset)
    }

    /// Maps a subset through `map[i-1] = j` (both 1-based).
    pub fn relabel(self, map: &[usize]) -> EdgeSubset {
        EdgeSubset::from_indices(self.indices().map(|i| map[i - 1]))
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

impl Ord for EdgeSubset {
    /// Lexicographic on the sorted index lists; a prefix sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Lowest index held by exactly one side; everything below is shared.
        let low = diff.trailing_zeros();
        let (mine, theirs) = if self.0 >> low & 1 == 1 { (self.0, other.0) } else { (other.0, self.0) };
        debug_assert!(mine >> low & 1 == 1);
        // `mine` lists `low` where `theirs` lists something larger or ends.
        let ord = if theirs >> low == 0 { Ordering::Greater } else { Ordering::Less };
        if mine == self.0 {
            ord
        } else {
            ord.reverse()
        }
    }
}

impl PartialOrd for EdgeSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for EdgeSubset {
    type Err = String;

    /// Accepts `{1,2,5}`, `1 2 5`, `[1, 2]` or `{}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches(['{', '['])
            .trim_end_matches(['}', ']']);
        let mut out = EdgeSubset::EMPTY;
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let i: usize = tok
                .parse()
                .map_err(|_| format!("invalid edge index '{tok}'"))?;
            if !(1..=MAX_EDGES).contains(&i) {
                return Err(format!("edge index {i} out of range 1..={MAX_EDGES}"));
            }
            out.insert(i);
        }
        Ok(out)
    }
}

impl Serialize for EdgeSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.indices())
    }
}

impl<'de> Deserialize<'de> for EdgeSubset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = v.iter().find(|&&i| !(1..=MAX_EDGES).contains(&i)) {
            return Err(serde::de::Error::custom(format!("edge index {bad} out of range")));
        }
        Ok(EdgeSubset::from_indices(v))
    }
}
