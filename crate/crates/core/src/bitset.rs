//! Dense bitsets over graph node ids.
//!
//! Fiber cones and process cone-unions are sets of node ids that tend to be
//! clustered: a cone's ids fall in a narrow range of the elaboration order.
//! `NodeSet` therefore stores a dense word array over a window
//! `[base*64, (base+len)*64)` instead of the whole id space, so a design with
//! tens of thousands of disjoint fibers stays at a few words per cone. All
//! operations degrade gracefully to a full-width dense bitset when windows
//! overlap everywhere.

/// A set of `u32` ids stored as a windowed dense bitset.
///
/// Canonical form: `words` never starts or ends with a zero word, and the
/// empty set is `base == 0, words == []`. All mutating operations restore
/// canonical form, so derived equality is set equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NodeSet {
    base: u32,
    words: Vec<u64>,
}

impl NodeSet {
    pub fn new() -> Self {
        NodeSet::default()
    }

    /// Builds a set from a slice of ids (duplicates allowed).
    pub fn from_ids(ids: &[u32]) -> Self {
        let mut s = NodeSet::new();
        for &id in ids {
            s.insert(id);
        }
        s
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn insert(&mut self, id: u32) {
        let w = id / 64;
        let b = id % 64;
        if self.words.is_empty() {
            self.base = w;
            self.words.push(0);
        } else if w < self.base {
            let grow = (self.base - w) as usize;
            let mut v = vec![0u64; grow + self.words.len()];
            v[grow..].copy_from_slice(&self.words);
            self.words = v;
            self.base = w;
        } else if w >= self.base + self.words.len() as u32 {
            self.words.resize((w - self.base + 1) as usize, 0);
        }
        self.words[(w - self.base) as usize] |= 1u64 << b;
    }

    pub fn contains(&self, id: u32) -> bool {
        let w = id / 64;
        if w < self.base || w >= self.base + self.words.len() as u32 {
            return false;
        }
        self.words[(w - self.base) as usize] & (1u64 << (id % 64)) != 0
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterates set ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let base = self.base;
        self.words.iter().enumerate().flat_map(move |(i, &w)| {
            let word_start = (base + i as u32) * 64;
            BitIter { word: w }.map(move |b| word_start + b)
        })
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        if other.is_empty() {
            return;
        }
        if self.is_empty() {
            *self = other.clone();
            return;
        }
        let new_base = self.base.min(other.base);
        let new_end = (self.base + self.words.len() as u32)
            .max(other.base + other.words.len() as u32);
        if new_base < self.base || new_end > self.base + self.words.len() as u32 {
            let mut v = vec![0u64; (new_end - new_base) as usize];
            let off = (self.base - new_base) as usize;
            v[off..off + self.words.len()].copy_from_slice(&self.words);
            self.words = v;
            self.base = new_base;
        }
        let off = (other.base - self.base) as usize;
        for (i, &w) in other.words.iter().enumerate() {
            self.words[off + i] |= w;
        }
    }

    pub fn is_disjoint(&self, other: &NodeSet) -> bool {
        self.overlap_words(other).all(|(a, b)| a & b == 0)
    }

    /// Word pairs over the overlapping window region.
    fn overlap_words<'a>(&'a self, other: &'a NodeSet) -> impl Iterator<Item = (u64, u64)> + 'a {
        let lo = self.base.max(other.base);
        let hi = (self.base + self.words.len() as u32)
            .min(other.base + other.words.len() as u32);
        (lo..hi.max(lo)).map(move |w| {
            (
                self.words[(w - self.base) as usize],
                other.words[(w - other.base) as usize],
            )
        })
    }

    /// Sum of `weight[id]` over all set ids.
    pub fn weight_sum(&self, weight: &[u32]) -> u64 {
        let mut total = 0u64;
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            let word_start = (self.base + i as u32) * 64;
            while w != 0 {
                let b = w.trailing_zeros();
                total += weight[(word_start + b) as usize] as u64;
                w &= w - 1;
            }
        }
        total
    }

    /// Sum of `weight[id]` over the union of the two sets, without
    /// materializing the union. This is the inner loop of merge selection.
    pub fn union_weight_sum(&self, other: &NodeSet, weight: &[u32]) -> u64 {
        self.weight_sum(weight) + other.weight_sum(weight)
            - self.intersection_weight_sum(other, weight)
    }

    /// Sum of `weight[id]` over the intersection of the two sets.
    pub fn intersection_weight_sum(&self, other: &NodeSet, weight: &[u32]) -> u64 {
        let lo = self.base.max(other.base);
        let mut total = 0u64;
        for (i, (a, b)) in self.overlap_words(other).enumerate() {
            let mut w = a & b;
            let word_start = (lo + i as u32) * 64;
            while w != 0 {
                let bit = w.trailing_zeros();
                total += weight[(word_start + bit) as usize] as u64;
                w &= w - 1;
            }
        }
        total
    }
}

impl FromIterator<u32> for NodeSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        let mut s = NodeSet::new();
        for id in iter {
            s.insert(id);
        }
        s
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn insert_contains_iter() {
        let mut s = NodeSet::new();
        for id in [700, 3, 64, 65, 1_000_000, 3] {
            s.insert(id);
        }
        assert!(s.contains(700));
        assert!(s.contains(3));
        assert!(!s.contains(4));
        assert!(!s.contains(2_000_000));
        assert_eq!(s.count_ones(), 5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 64, 65, 700, 1_000_000]);
    }

    #[test]
    fn union_and_weights() {
        let a = NodeSet::from_ids(&[1, 2, 130]);
        let b = NodeSet::from_ids(&[2, 131, 900]);
        let mut u = a.clone();
        u.union_with(&b);
        assert_eq!(u.iter().collect::<Vec<_>>(), vec![1, 2, 130, 131, 900]);

        let weight: Vec<u32> = (0..1024).collect();
        assert_eq!(a.weight_sum(&weight), 1 + 2 + 130);
        assert_eq!(a.intersection_weight_sum(&b, &weight), 2);
        assert_eq!(a.union_weight_sum(&b, &weight), 1 + 2 + 130 + 131 + 900);
        assert!(!a.is_disjoint(&b));
        assert!(a.is_disjoint(&NodeSet::from_ids(&[5000])));
    }

    #[test]
    fn union_weight_equals_materialized() {
        // randomized cross-check against a BTreeSet model
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let weight: Vec<u32> = (0..4096).map(|i| (i % 17) as u32 + 1).collect();
        for _ in 0..50 {
            let a_ids: Vec<u32> = (0..40).map(|_| (next() % 4096) as u32).collect();
            let b_ids: Vec<u32> = (0..40).map(|_| (next() % 4096) as u32).collect();
            let a = NodeSet::from_ids(&a_ids);
            let b = NodeSet::from_ids(&b_ids);
            let model: BTreeSet<u32> = a_ids.iter().chain(b_ids.iter()).copied().collect();
            let expect: u64 = model.iter().map(|&i| weight[i as usize] as u64).sum();
            assert_eq!(a.union_weight_sum(&b, &weight), expect);
            let mut u = a.clone();
            u.union_with(&b);
            assert_eq!(u.weight_sum(&weight), expect);
            assert_eq!(u.iter().collect::<BTreeSet<_>>(), model);
        }
    }
}
