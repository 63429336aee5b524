//! Rank, select and access over sequences from a small alphabet.
//!
//! Backed by a balanced wavelet tree, so each query costs `O(log sigma)`
//! bitvector operations. Positions and ranks are 1-based.

mod bits;
mod wavelet;

pub(crate) use wavelet::WaveletTree;

use crate::error::{invalid, Error, Result};

/// A static string over codes `0..alphabet_size` supporting rank/select/access.
#[derive(Debug, Clone)]
pub struct RankSelectString {
    tree: WaveletTree,
}

impl RankSelectString {
    /// Builds the structure. Fails if any code is `>= alphabet_size`.
    pub fn new(seq: &[u32], alphabet_size: u32) -> Result<Self> {
        if let Some((i, &c)) = seq.iter().enumerate().find(|(_, &c)| c >= alphabet_size) {
            return Err(invalid!(
                "code {c} at position {} outside alphabet of size {alphabet_size}",
                i + 1
            ));
        }
        Ok(RankSelectString {
            tree: WaveletTree::new(seq, alphabet_size.max(1)),
        })
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn alphabet_size(&self) -> u32 {
        self.tree.sigma()
    }

    /// Occurrences of `c` among positions `1..=i`.
    pub fn rank(&self, c: u32, i: usize) -> Result<usize> {
        if i > self.len() {
            return Err(invalid!("rank position {i} exceeds length {}", self.len()));
        }
        Ok(self.tree.rank(c, i))
    }

    /// Unchecked rank used on hot paths where `i <= len` is guaranteed.
    #[inline]
    pub(crate) fn rank_unchecked(&self, c: u32, i: usize) -> usize {
        self.tree.rank(c, i)
    }

    /// Position of the `j`-th occurrence of `c`.
    pub fn select(&self, c: u32, j: usize) -> Result<usize> {
        self.tree
            .select(c, j)
            .map(|p| p + 1)
            .ok_or_else(|| Error::NotFound(format!("occurrence {j} of code {c}")))
    }

    /// The character at position `i`.
    pub fn access(&self, i: usize) -> Result<u32> {
        if i == 0 || i > self.len() {
            return Err(invalid!("access position {i} outside 1..={}", self.len()));
        }
        Ok(self.tree.access(i - 1))
    }

    pub fn to_vec(&self) -> Vec<u32> {
        (0..self.len()).map(|i| self.tree.access(i)).collect()
    }

    /// Bits held by the underlying bitvectors, excluding rank directories.
    pub fn payload_bits(&self) -> usize {
        self.tree.payload_bits()
    }
}
