use std::cmp::Ordering;
use std::fmt;

/// A subset of the simple roots, stored as a bitmask over 0-based indices.
///
/// Ordering is by size first, then lexicographic on the sorted index list.
/// Text forms use 1-based labels (`{s1, s3}`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SimpleSubset(u64);

impl SimpleSubset {
    pub const fn empty() -> Self {
        SimpleSubset(0)
    }

    pub fn full(rank: usize) -> Self {
        assert!(rank <= 64);
        if rank == 64 {
            SimpleSubset(u64::MAX)
        } else {
            SimpleSubset((1u64 << rank) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = SimpleSubset::empty();
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn from_bits(bits: u64) -> Self {
        SimpleSubset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SimpleSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: SimpleSubset) -> Self {
        SimpleSubset(self.0 & other.0)
    }

    pub fn union(self, other: SimpleSubset) -> Self {
        SimpleSubset(self.0 | other.0)
    }

    pub fn difference(self, other: SimpleSubset) -> Self {
        SimpleSubset(self.0 & !other.0)
    }

    pub fn complement(self, rank: usize) -> Self {
        SimpleSubset::full(rank).difference(self)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets, ordered by size and then lexicographically.
    pub fn subsets(self) -> Vec<SimpleSubset> {
        let idx = self.indices();
        let mut out: Vec<SimpleSubset> = (0u64..(1u64 << idx.len()))
            .map(|m| SimpleSubset::from_indices((0..idx.len()).filter(|k| m & (1 << k) != 0).map(|k| idx[k])))
            .collect();
        out.sort();
        out
    }

    /// Labels such as `["s1", "s3"]`.
    pub fn labels(self) -> Vec<String> {
        self.iter().map(|i| format!("s{}", i + 1)).collect()
    }

    /// Parses a comma-separated list of 1-based indices (`1,3`), optionally
    /// written as `s1,s3`. The empty string is the empty set.
    pub fn parse(text: &str, rank: usize) -> crate::Result<Self> {
        let mut s = SimpleSubset::empty();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let digits = tok.strip_prefix('s').unwrap_or(tok);
            let i: usize = digits
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad simple root index {tok:?}")))?;
            if i == 0 || i > rank {
                return Err(crate::Error::IndexOutOfRange { index: i, rank });
            }
            s.insert(i - 1);
        }
        Ok(s)
    }
}

impl Ord for SimpleSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for SimpleSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

impl fmt::Debug for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
