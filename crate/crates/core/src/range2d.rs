//! Orthogonal range counting over points `(x, y)` with exactly one point per
//! `x` in `1..=n`.
//!
//! The `y` values are replaced by their rank among the distinct values and
//! stored in a wavelet tree, so a rectangle count costs `O(log n)`.

use crate::rank_select::WaveletTree;

#[derive(Debug, Clone)]
pub struct RangeCounter2D {
    distinct: Vec<u64>,
    ranks: WaveletTree,
}

impl RangeCounter2D {
    /// `ys[x - 1]` is the `y` of the point at `x`.
    pub fn new(ys: &[u64]) -> Self {
        let mut distinct = ys.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let dense: Vec<u32> = ys
            .iter()
            .map(|y| distinct.binary_search(y).unwrap() as u32)
            .collect();
        let ranks = WaveletTree::new(&dense, distinct.len().max(1) as u32);
        RangeCounter2D { distinct, ranks }
    }

    pub fn n_points(&self) -> usize {
        self.ranks.len()
    }

    /// Dense `y` interval for `[y1, y2]`, or `None` if no stored `y` falls in it.
    fn dense_range(&self, y1: u64, y2: u64) -> Option<(u32, u32)> {
        if y1 > y2 {
            return None;
        }
        let first = self.distinct.partition_point(|&y| y < y1);
        let end = self.distinct.partition_point(|&y| y <= y2);
        (first < end).then(|| (first as u32, end as u32 - 1))
    }

    fn clamp_x(&self, x1: usize, x2: usize) -> Option<(usize, usize)> {
        let x1 = x1.max(1);
        let x2 = x2.min(self.n_points());
        (x1 <= x2).then_some((x1 - 1, x2))
    }

    /// Points with `x1 <= x <= x2` and `y1 <= y <= y2`.
    pub fn count_rect(&self, x1: usize, x2: usize, y1: u64, y2: u64) -> usize {
        match (self.clamp_x(x1, x2), self.dense_range(y1, y2)) {
            (Some((l, r)), Some((lo, hi))) => self.ranks.range_count(l, r, lo, hi),
            _ => 0,
        }
    }

    /// Some `x` of a point inside the rectangle.
    pub fn find_point(&self, x1: usize, x2: usize, y1: u64, y2: u64) -> Option<usize> {
        let (l, r) = self.clamp_x(x1, x2)?;
        let (lo, hi) = self.dense_range(y1, y2)?;
        self.ranks.find_in_range(l, r, lo, hi).map(|p| p + 1)
    }

    /// The `y` of the point at `x`.
    pub fn y_at(&self, x: usize) -> u64 {
        self.distinct[self.ranks.access(x - 1) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(ys: &[u64], x1: usize, x2: usize, y1: u64, y2: u64) -> usize {
        (x1.max(1)..=x2.min(ys.len()))
            .filter(|&x| y1 <= ys[x - 1] && ys[x - 1] <= y2)
            .count()
    }

    #[test]
    fn trivial_cases() {
        let empty = RangeCounter2D::new(&[]);
        assert_eq!(empty.n_points(), 0);
        assert_eq!(empty.count_rect(1, 10, 0, 100), 0);

        let zeros = RangeCounter2D::new(&[0; 9]);
        assert_eq!(zeros.count_rect(3, 7, 0, 0), 5);
        assert_eq!(zeros.count_rect(3, 7, 1, 5), 0);

        let ys = [5, 1, 9, 1, 7];
        let rc = RangeCounter2D::new(&ys);
        assert_eq!(rc.count_rect(1, 5, 0, u64::MAX), 5);
        assert_eq!(rc.count_rect(3, 3, 9, 9), 1);
        assert_eq!(rc.count_rect(3, 3, 0, 8), 0);
        assert_eq!(rc.count_rect(4, 2, 0, 9), 0);
        assert_eq!(rc.y_at(3), 9);
    }

    #[test]
    fn exhaustive_small_instances() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..8 {
            let n = rng.gen_range(1..=256);
            let ys: Vec<u64> = (0..n).map(|_| rng.gen_range(0..40) * 1_000_003).collect();
            let rc = RangeCounter2D::new(&ys);
            let mut corners: Vec<u64> = ys.clone();
            corners.sort_unstable();
            corners.dedup();
            // rectangle corners drawn from occurring coordinates
            for x1 in (1..=n).step_by(19) {
                for x2 in (x1..=n).step_by(17) {
                    for (i, &y1) in corners.iter().enumerate() {
                        for &y2 in &corners[i..] {
                            assert_eq!(rc.count_rect(x1, x2, y1, y2), brute(&ys, x1, x2, y1, y2));
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn additive_in_x(
            ys in prop::collection::vec(0u64..1000, 1..120),
            x1 in 1usize..130, x2 in 1usize..130, y1 in 0u64..1000, y2 in 0u64..1000,
        ) {
            let rc = RangeCounter2D::new(&ys);
            prop_assert_eq!(rc.count_rect(x1, x2, y1, y2), brute(&ys, x1, x2, y1, y2));
            if x1 <= x2 {
                prop_assert_eq!(
                    rc.count_rect(x1, x2, y1, y2),
                    rc.count_rect(1, x2, y1, y2) - rc.count_rect(1, x1 - 1, y1, y2)
                );
            }
            match rc.find_point(x1, x2, y1, y2) {
                Some(x) => {
                    prop_assert!(x1 <= x && x <= x2);
                    prop_assert!(y1 <= ys[x - 1] && ys[x - 1] <= y2);
                }
                None => prop_assert_eq!(brute(&ys, x1, x2, y1, y2), 0),
            }
        }
    }
}
