//! Maps a label interval `[a, b]` to the block of `S_r` holding exactly the
//! characters labelled in `[a, b]`.
//!
//! Predecessor search is a binary search over the distinct labels, so a
//! lookup costs `O(log n)`.

use crate::error::{invalid, Result};

#[derive(Debug, Clone)]
pub struct LabelIndex {
    distinct: Vec<u64>,
    // cum_freq[k] = number of characters labelled <= distinct[k]
    cum_freq: Vec<usize>,
    universe: u64,
}

impl LabelIndex {
    /// Labels must already be validated against `universe`.
    pub fn new(labels: &[u64], universe: u64) -> Self {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        let mut distinct = Vec::new();
        let mut cum_freq = Vec::new();
        for (i, &l) in sorted.iter().enumerate() {
            if distinct.last() == Some(&l) {
                *cum_freq.last_mut().unwrap() = i + 1;
            } else {
                distinct.push(l);
                cum_freq.push(i + 1);
            }
        }
        LabelIndex {
            distinct,
            cum_freq,
            universe,
        }
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn distinct_labels(&self) -> &[u64] {
        &self.distinct
    }

    pub fn cum_freq(&self) -> &[usize] {
        &self.cum_freq
    }

    /// Indices into the distinct labels covering `[a, b]`, 0-based inclusive.
    pub fn label_ranks(&self, a: u64, b: u64) -> Result<Option<(usize, usize)>> {
        if a > self.universe || b > self.universe {
            return Err(invalid!(
                "label range [{a}, {b}] exceeds universe {}",
                self.universe
            ));
        }
        if a > b {
            return Ok(None);
        }
        let first = self.distinct.partition_point(|&l| l < a);
        let end = self.distinct.partition_point(|&l| l <= b);
        Ok((first < end).then(|| (first, end - 1)))
    }

    /// 1-based inclusive positions in `S_r` of the characters labelled in
    /// `[a, b]`, or `None` when there are none.
    pub fn label_interval(&self, a: u64, b: u64) -> Result<Option<(usize, usize)>> {
        Ok(self.label_ranks(a, b)?.map(|(k1, k2)| {
            let lo = if k1 == 0 { 0 } else { self.cum_freq[k1 - 1] };
            (lo + 1, self.cum_freq[k2])
        }))
    }
}
