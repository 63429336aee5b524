//! Counting problems reduced to substring range counting. Every reduction
//! uses labels in `[0, n]`.

use crate::error::{invalid, Result};
use crate::index::{BuildConfig, LabeledText, SrcIndex, SrcQuery};
use crate::suffix_tree::SuffixTree;

/// Position intervals `[start, end]`, 1-based and inclusive.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalSet {
    intervals: Vec<(usize, usize)>,
}

impl IntervalSet {
    pub fn new(intervals: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(s, e)) = intervals.iter().find(|&&(s, e)| s == 0 || s > e) {
            return Err(invalid!("interval ({s}, {e}) is not a 1-based range"));
        }
        Ok(IntervalSet { intervals })
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }
}

/// Number of characters separating the two patterns of a gapped query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapSpec {
    pub d: usize,
}

fn nonempty(name: &str, p: &[u8]) -> Result<()> {
    if p.is_empty() {
        return Err(invalid!("{name} must be non-empty"));
    }
    Ok(())
}

/// Counts occurrences of a pattern starting inside a position range.
#[derive(Debug, Clone)]
pub struct PositionIndex {
    index: SrcIndex,
}

impl PositionIndex {
    pub fn build(s: &[u8], config: &BuildConfig) -> Result<Self> {
        let n = s.len();
        let lt = LabeledText::new(s.to_vec(), (1..=n as u64).collect(), n as u64)?;
        Ok(PositionIndex {
            index: SrcIndex::build(&lt, config)?,
        })
    }

    pub fn count(&self, pattern: &[u8], i: usize, j: usize) -> Result<usize> {
        let n = self.index.text_len();
        if i == 0 || i > j || j > n {
            return Err(invalid!("position range [{i}, {j}] not within [1, {n}]"));
        }
        self.index
            .count(&SrcQuery::new(pattern, i as u64, j as u64)?)
    }

    pub fn index(&self) -> &SrcIndex {
        &self.index
    }
}

/// Position-restricted counting limited to a fixed set of intervals.
#[derive(Debug, Clone)]
pub struct IntervalIndex {
    index: SrcIndex,
}

impl IntervalIndex {
    pub fn build(s: &[u8], pi: &IntervalSet, config: &BuildConfig) -> Result<Self> {
        let n = s.len();
        let mut covered = vec![false; n + 2];
        for &(start, end) in pi.intervals() {
            if end > n {
                return Err(invalid!(
                    "interval ({start}, {end}) extends past position {n}"
                ));
            }
            covered[start..=end].iter_mut().for_each(|c| *c = true);
        }
        let labels = (1..=n)
            .map(|p| if covered[p] { p as u64 } else { 0 })
            .collect();
        let lt = LabeledText::new(s.to_vec(), labels, n as u64)?;
        Ok(IntervalIndex {
            index: SrcIndex::build(&lt, config)?,
        })
    }

    /// Label 0 marks excluded positions, so `i` must be at least 1.
    pub fn count(&self, pattern: &[u8], i: usize, j: usize) -> Result<usize> {
        let n = self.index.text_len();
        if i == 0 || j > n {
            return Err(invalid!("position range [{i}, {j}] not within [1, {n}]"));
        }
        self.index
            .count(&SrcQuery::new(pattern, i as u64, j as u64)?)
    }

    pub fn index(&self) -> &SrcIndex {
        &self.index
    }
}

/// Counts `P1`, then exactly `d` characters, then `P2`.
///
/// Position `i + d + 1` carries the rank of the reversed prefix `S[1..i]`
/// among all reversed prefixes; those are the suffixes of `reverse(S)`.
#[derive(Debug, Clone)]
pub struct GappedIndex {
    gap: GapSpec,
    reversed: SuffixTree,
    index: SrcIndex,
}

impl GappedIndex {
    pub fn build(s: &[u8], gap: GapSpec, config: &BuildConfig) -> Result<Self> {
        let n = s.len();
        if n == 0 {
            return Err(invalid!("text must be non-empty"));
        }
        let rev: Vec<u8> = s.iter().rev().copied().collect();
        let reversed = SuffixTree::build(&rev);
        // reversed prefix S[1..i] starts at 0-based n - i in reverse(S);
        // ranks drop the sentinel suffix so they fall in [1, n]
        let ranks = reversed.suffix_ranks();
        let mut labels = vec![0u64; n];
        for i in 1..n.saturating_sub(gap.d) {
            labels[i + gap.d] = (ranks[n - i] - 1) as u64;
        }
        let lt = LabeledText::new(s.to_vec(), labels, n as u64)?;
        Ok(GappedIndex {
            gap,
            reversed,
            index: SrcIndex::build(&lt, config)?,
        })
    }

    pub fn gap(&self) -> GapSpec {
        self.gap
    }

    pub fn count(&self, p1: &[u8], p2: &[u8]) -> Result<usize> {
        nonempty("first pattern", p1)?;
        nonempty("second pattern", p2)?;
        let rev_p1: Vec<u8> = p1.iter().rev().copied().collect();
        match self.reversed.pattern_interval(&rev_p1) {
            Some((lo, hi)) => self
                .index
                .count(&SrcQuery::new(p2, lo as u64 - 1, hi as u64 - 1)?),
            None => Ok(0),
        }
    }

    pub fn index(&self) -> &SrcIndex {
        &self.index
    }
}

/// Counts positions where `P1` occurs in `S1` and `P2` occurs at the mapped
/// position in `S2`.
#[derive(Debug, Clone)]
pub struct AlignedIndex {
    second: SuffixTree,
    index: SrcIndex,
}

impl AlignedIndex {
    /// Aligns position `i` of `s1` with position `i` of `s2`.
    pub fn build(s1: &[u8], s2: &[u8], config: &BuildConfig) -> Result<Self> {
        let f: Vec<Option<usize>> = (1..=s1.len())
            .map(|i| (i <= s2.len()).then_some(i))
            .collect();
        Self::with_map(s1, s2, &f, config)
    }

    /// `f[i - 1]` is the 1-based position of `s2` aligned with position `i`
    /// of `s1`, or `None` if there is none.
    pub fn with_map(
        s1: &[u8],
        s2: &[u8],
        f: &[Option<usize>],
        config: &BuildConfig,
    ) -> Result<Self> {
        if s2.is_empty() {
            return Err(invalid!("second text must be non-empty"));
        }
        if f.len() != s1.len() {
            return Err(invalid!(
                "position map has {} entries for {} positions",
                f.len(),
                s1.len()
            ));
        }
        let second = SuffixTree::build(s2);
        let ranks = second.suffix_ranks();
        let labels = f
            .iter()
            .map(|t| match *t {
                None => Ok(0),
                Some(t) if (1..=s2.len()).contains(&t) => Ok((ranks[t - 1] - 1) as u64),
                Some(t) => Err(invalid!("mapped position {t} outside [1, {}]", s2.len())),
            })
            .collect::<Result<Vec<u64>>>()?;
        let lt = LabeledText::new(s1.to_vec(), labels, s2.len() as u64)?;
        Ok(AlignedIndex {
            second,
            index: SrcIndex::build(&lt, config)?,
        })
    }

    pub fn count(&self, p1: &[u8], p2: &[u8]) -> Result<usize> {
        nonempty("first pattern", p1)?;
        nonempty("second pattern", p2)?;
        match self.second.pattern_interval(p2) {
            Some((lo, hi)) => self
                .index
                .count(&SrcQuery::new(p1, lo as u64 - 1, hi as u64 - 1)?),
            None => Ok(0),
        }
    }

    pub fn index(&self) -> &SrcIndex {
        &self.index
    }
}
