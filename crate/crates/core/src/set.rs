use std::fmt;

/// A subset of the vertices `0..n-1` of some hypergraph, stored as a
/// fixed-width bitmask with a cached cardinality.
///
/// Sets are only meaningful relative to the hypergraph (or point set) they
/// were built for; all binary operations assume both operands share the
/// same universe width.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Box<[u64]>,
    card: u32,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: vec![0u64; words_for(n)].into_boxed_slice(),
            card: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; words_for(n)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        if n == 0 {
            words.clear();
        }
        VertexSet {
            words: words.into_boxed_slice(),
            card: n as u32,
        }
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &i in indices {
            debug_assert!(i < n);
            s.insert(i);
        }
        s
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        Self::from_indices(n, &[i])
    }

    #[inline]
    pub fn card(&self) -> usize {
        self.card as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.card == 0
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        let w = i / 64;
        w < self.words.len() && (self.words[w] >> (i % 64)) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        let bit = 1u64 << (i % 64);
        if self.words[w] & bit == 0 {
            self.words[w] |= bit;
            self.card += 1;
        }
    }

    pub fn remove(&mut self, i: usize) {
        let w = i / 64;
        let bit = 1u64 << (i % 64);
        if w < self.words.len() && self.words[w] & bit != 0 {
            self.words[w] &= !bit;
            self.card -= 1;
        }
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        let card = words.iter().map(|w| w.count_ones()).sum();
        VertexSet {
            words: words.into_boxed_slice(),
            card,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a | b)
            .collect();
        let card = words.iter().map(|w| w.count_ones()).sum();
        VertexSet {
            words: words.into_boxed_slice(),
            card,
        }
    }

    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & !b)
            .collect();
        let card = words.iter().map(|w| w.count_ones()).sum();
        VertexSet {
            words: words.into_boxed_slice(),
            card,
        }
    }

    #[inline]
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn intersection_card(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares as ascending index sequences (smallest first element wins).
    pub fn cmp_lex(&self, other: &VertexSet) -> std::cmp::Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) => {
                    if x != y {
                        return x.cmp(&y);
                    }
                }
            }
        }
    }
}

impl fmt::Debug for VertexSet {
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
