//! Brute-force reference answers, written as direct scans with no code
//! shared with the index.

use crate::index::LabeledText;

fn occurs_at(text: &[u8], pattern: &[u8], start: usize) -> bool {
    // start is 0-based
    if pattern.is_empty() || start + pattern.len() > text.len() {
        return false;
    }
    let mut k = 0;
    while k < pattern.len() {
        if text[start + k] != pattern[k] {
            return false;
        }
        k += 1;
    }
    true
}

/// 1-based starts of every occurrence of `pattern` in `text`.
pub fn occurrences(text: &[u8], pattern: &[u8]) -> Vec<usize> {
    (0..text.len())
        .filter(|&i| occurs_at(text, pattern, i))
        .map(|i| i + 1)
        .collect()
}

/// Occurrences whose first character is labelled in `[a, b]`.
pub fn naive_count(lt: &LabeledText, pattern: &[u8], a: u64, b: u64) -> usize {
    naive_qualifying(lt, pattern, a, b).len()
}

/// 1-based starts counted by [`naive_count`].
pub fn naive_qualifying(lt: &LabeledText, pattern: &[u8], a: u64, b: u64) -> Vec<usize> {
    let labels = lt.labels();
    occurrences(lt.text(), pattern)
        .into_iter()
        .filter(|&p| a <= labels[p - 1] && labels[p - 1] <= b)
        .collect()
}

/// Occurrences of `pattern` starting within `[i, j]` (1-based).
pub fn naive_prsc(s: &[u8], pattern: &[u8], i: usize, j: usize) -> usize {
    occurrences(s, pattern)
        .into_iter()
        .filter(|&p| i <= p && p <= j)
        .count()
}

/// Occurrences starting within `[i, j]` and inside some interval of `pi`.
pub fn naive_intervals(
    s: &[u8],
    pi: &[(usize, usize)],
    pattern: &[u8],
    i: usize,
    j: usize,
) -> usize {
    occurrences(s, pattern)
        .into_iter()
        .filter(|&p| i <= p && p <= j && pi.iter().any(|&(lo, hi)| lo <= p && p <= hi))
        .count()
}

/// Positions where `p1` occurs, then `d` characters, then `p2`.
pub fn naive_gaps(s: &[u8], d: usize, p1: &[u8], p2: &[u8]) -> usize {
    (0..s.len())
        .filter(|&p| occurs_at(s, p1, p) && occurs_at(s, p2, p + p1.len() + d))
        .count()
}

/// Positions `i` where `p1` occurs in `s1` and `p2` occurs in `s2`.
pub fn naive_aligned(s1: &[u8], s2: &[u8], p1: &[u8], p2: &[u8]) -> usize {
    (0..s1.len().min(s2.len()))
        .filter(|&i| occurs_at(s1, p1, i) && occurs_at(s2, p2, i))
        .count()
}

/// Like [`naive_aligned`] but with `p2` checked at `f(i)` instead of `i`.
pub fn naive_aligned_map(s1: &[u8], s2: &[u8], f: &[Option<usize>], p1: &[u8], p2: &[u8]) -> usize {
    (0..s1.len())
        .filter(|&i| {
            occurs_at(s1, p1, i)
                && f.get(i)
                    .copied()
                    .flatten()
                    .is_some_and(|t| t >= 1 && occurs_at(s2, p2, t - 1))
        })
        .count()
}
