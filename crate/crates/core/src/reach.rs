//! Subset-sum reachability by (item count, sum), indexed by suffix.
//!
//! `row(i, c)` is the set of sums `<= cap` reachable by choosing exactly `c`
//! items from `weights[i..]`. Having every suffix available lets callers
//! recover the lexicographically smallest index subset greedily.

use crate::error::{Error, Result};

/// Upper bound on the number of bits a table may allocate.
pub(crate) const MAX_TABLE_BITS: u128 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    fn new(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[cfg(test)]
    fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `self |= other << shift`, dropping bits at or above `len`.
    fn or_shifted(&mut self, other: &BitRow, shift: usize) {
        if shift >= self.len {
            return;
        }
        let (ws, bs) = (shift / 64, shift % 64);
        for j in (ws..self.words.len()).rev() {
            let src = j - ws;
            let mut v = other.words[src] << bs;
            if bs > 0 && src > 0 {
                v |= other.words[src - 1] >> (64 - bs);
            }
            self.words[j] |= v;
        }
        let tail = self.len % 64;
        if tail != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << tail) - 1;
        }
    }

    /// Largest set bit `<= limit`.
    pub(crate) fn max_at_most(&self, limit: usize) -> Option<usize> {
        if self.len == 0 {
            return None;
        }
        let limit = limit.min(self.len - 1);
        let mut j = limit / 64;
        let mut word = self.words[j] & mask_through(limit % 64);
        loop {
            if word != 0 {
                return Some(j * 64 + 63 - word.leading_zeros() as usize);
            }
            if j == 0 {
                return None;
            }
            j -= 1;
            word = self.words[j];
        }
    }

    /// Smallest set bit `>= from`.
    pub(crate) fn min_at_least(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut j = from / 64;
        let mut word = self.words[j] & !mask_below(from % 64);
        loop {
            if word != 0 {
                return Some(j * 64 + word.trailing_zeros() as usize);
            }
            j += 1;
            if j == self.words.len() {
                return None;
            }
            word = self.words[j];
        }
    }

    pub(crate) fn any_in(&self, lo: usize, hi: usize) -> bool {
        lo <= hi && self.min_at_least(lo).is_some_and(|s| s <= hi)
    }
}

fn mask_through(bit: usize) -> u64 {
    if bit == 63 {
        u64::MAX
    } else {
        (1u64 << (bit + 1)) - 1
    }
}

fn mask_below(bit: usize) -> u64 {
    (1u64 << bit) - 1
}

#[derive(Debug)]
pub(crate) struct SuffixReach {
    weights: Vec<u64>,
    max_count: usize,
    // rows[i * (max_count + 1) + c]
    rows: Vec<BitRow>,
}

impl SuffixReach {
    pub(crate) fn build(weights: &[u64], cap: u64, max_count: usize) -> Result<Self> {
        let m = weights.len();
        let max_count = max_count.min(m);
        let bits = (m as u128 + 1) * (max_count as u128 + 1) * (cap as u128 + 1);
        if bits > MAX_TABLE_BITS {
            return Err(Error::limit("subset-sum table bits", bits, MAX_TABLE_BITS));
        }
        let len = cap as usize + 1;
        let stride = max_count + 1;
        let mut rows = vec![BitRow::new(len); (m + 1) * stride];
        rows[m * stride].set(0);
        for i in (0..m).rev() {
            let (head, tail) = rows.split_at_mut((i + 1) * stride);
            let cur = &mut head[i * stride..];
            let next = &tail[..stride];
            for c in 0..stride {
                cur[c] = next[c].clone();
                if c > 0 && weights[i] <= cap {
                    cur[c].or_shifted(&next[c - 1], weights[i] as usize);
                }
            }
        }
        Ok(SuffixReach {
            weights: weights.to_vec(),
            max_count,
            rows,
        })
    }

    pub(crate) fn max_count(&self) -> usize {
        self.max_count
    }

    /// Sums reachable with exactly `count` items from `weights[from..]`.
    pub(crate) fn row(&self, from: usize, count: usize) -> &BitRow {
        &self.rows[from * (self.max_count + 1) + count]
    }

    /// Lexicographically smallest index subset of size `count` whose weight
    /// lies in `lo..=hi`, if one exists.
    pub(crate) fn lex_min(&self, count: usize, lo: u64, hi: u64) -> Option<Vec<usize>> {
        if count > self.max_count {
            return None;
        }
        let (mut lo, mut hi) = (lo, hi);
        if !self.row(0, count).any_in(lo as usize, hi as usize) {
            return None;
        }
        let mut picked = Vec::with_capacity(count);
        let mut left = count;
        for (i, &w) in self.weights.iter().enumerate() {
            if left == 0 {
                break;
            }
            if w <= hi {
                let (l, h) = (lo.saturating_sub(w), hi - w);
                if self.row(i + 1, left - 1).any_in(l as usize, h as usize) {
                    picked.push(i);
                    left -= 1;
                    lo = l;
                    hi = h;
                }
            }
        }
        debug_assert_eq!(left, 0);
        Some(picked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_or_across_words() {
        let mut a = BitRow::new(200);
        let mut b = BitRow::new(200);
        b.set(0);
        b.set(63);
        b.set(130);
        a.or_shifted(&b, 65);
        assert!(a.get(65) && a.get(128) && a.get(195));
        assert!(!a.get(130));
        let mut c = BitRow::new(70);
        c.or_shifted(&b, 10);
        assert!(c.get(10));
        assert_eq!(c.max_at_most(1000), Some(10));
    }

    #[test]
    fn range_queries() {
        let mut r = BitRow::new(300);
        for i in [3, 64, 190] {
            r.set(i);
        }
        assert_eq!(r.max_at_most(63), Some(3));
        assert_eq!(r.max_at_most(64), Some(64));
        assert_eq!(r.max_at_most(2), None);
        assert_eq!(r.min_at_least(4), Some(64));
        assert_eq!(r.min_at_least(191), None);
        assert!(r.any_in(100, 190));
        assert!(!r.any_in(65, 189));
    }

    #[test]
    fn matches_enumeration() {
        let weights = [3u64, 5, 2, 7, 2, 9];
        let cap = 20;
        let table = SuffixReach::build(&weights, cap, weights.len()).unwrap();
        for from in 0..=weights.len() {
            let m = weights.len() - from;
            for c in 0..=weights.len() {
                let mut expect = vec![false; cap as usize + 1];
                for mask in 0u32..1 << m {
                    if mask.count_ones() as usize != c {
                        continue;
                    }
                    let s: u64 = (0..m)
                        .filter(|j| mask >> j & 1 == 1)
                        .map(|j| weights[from + j])
                        .sum();
                    if s <= cap {
                        expect[s as usize] = true;
                    }
                }
                for (s, &e) in expect.iter().enumerate() {
                    assert_eq!(table.row(from, c).get(s), e, "from {from} c {c} s {s}");
                }
            }
        }
    }

    #[test]
    fn lex_min_is_lexicographic() {
        let weights = [1u64, 4, 2, 3, 5];
        let table = SuffixReach::build(&weights, 20, 5).unwrap();
        // size-2 subsets of weight 5: {0,1}, {2,3}; {0,1} is smaller.
        assert_eq!(table.lex_min(2, 5, 5), Some(vec![0, 1]));
        assert_eq!(table.lex_min(2, 7, 8), Some(vec![1, 3]));
        assert_eq!(table.lex_min(1, 6, 6), None);
        assert_eq!(table.lex_min(0, 0, 3), Some(vec![]));
    }

    #[test]
    fn oversized_table_is_refused() {
        let err = SuffixReach::build(&[1; 100], 1 << 30, 100).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }
}
