//! Balanced pointer-based wavelet tree over dense codes `0..sigma`.
//!
//! Positions here are 0-based and ranges half-open; the public 1-based API
//! lives in [`super::RankSelectString`] and [`crate::range2d`].

use super::bits::RankBitVec;

#[derive(Debug, Clone)]
struct Node {
    // bit set => symbol goes right (symbol >= mid)
    bits: RankBitVec,
    left: Option<Box<Node>>,
    right: Option<Box<Node>>,
}

#[derive(Debug, Clone)]
pub struct WaveletTree {
    len: usize,
    sigma: u32,
    root: Option<Box<Node>>,
}

impl WaveletTree {
    /// Builds the tree; every symbol must be `< sigma`.
    pub fn new(seq: &[u32], sigma: u32) -> Self {
        debug_assert!(seq.iter().all(|&c| c < sigma));
        WaveletTree {
            len: seq.len(),
            sigma,
            root: build(seq.to_vec(), 0, sigma),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn access(&self, mut i: usize) -> u32 {
        debug_assert!(i < self.len);
        let (mut lo, mut hi) = (0, self.sigma);
        let mut node = self.root.as_deref();
        while let Some(n) = node {
            let mid = lo + (hi - lo) / 2;
            if n.bits.get(i) {
                i = n.bits.rank1(i);
                lo = mid;
                node = n.right.as_deref();
            } else {
                i = n.bits.rank0(i);
                hi = mid;
                node = n.left.as_deref();
            }
        }
        lo
    }

    /// Occurrences of `c` in `[0, i)`.
    pub fn rank(&self, c: u32, mut i: usize) -> usize {
        if c >= self.sigma {
            return 0;
        }
        let (mut lo, mut hi) = (0, self.sigma);
        let mut node = self.root.as_deref();
        while let Some(n) = node {
            if i == 0 {
                return 0;
            }
            let mid = lo + (hi - lo) / 2;
            if c >= mid {
                i = n.bits.rank1(i);
                lo = mid;
                node = n.right.as_deref();
            } else {
                i = n.bits.rank0(i);
                hi = mid;
                node = n.left.as_deref();
            }
        }
        i
    }

    /// 0-based position of the `k`-th occurrence (`k` 1-based) of `c`.
    pub fn select(&self, c: u32, k: usize) -> Option<usize> {
        if c >= self.sigma || k == 0 {
            return None;
        }
        if self.root.is_none() {
            // sigma == 1: the sequence is unary
            return (k <= self.len).then(|| k - 1);
        }
        let mut path: Vec<(&Node, bool)> = Vec::new();
        let (mut lo, mut hi) = (0, self.sigma);
        let mut node = self.root.as_deref();
        while let Some(n) = node {
            let mid = lo + (hi - lo) / 2;
            let right = c >= mid;
            path.push((n, right));
            if right {
                lo = mid;
                node = n.right.as_deref();
            } else {
                hi = mid;
                node = n.left.as_deref();
            }
        }
        // k is now a count within the leaf; climb converting to positions
        let mut k = k;
        for (n, right) in path.into_iter().rev() {
            let pos = if right {
                n.bits.select1(k)?
            } else {
                n.bits.select0(k)?
            };
            k = pos + 1;
        }
        Some(k - 1)
    }

    /// Number of positions in `[l, r)` whose symbol lies in `[vlo, vhi]`.
    pub fn range_count(&self, l: usize, r: usize, vlo: u32, vhi: u32) -> usize {
        if l >= r || vlo > vhi || vlo >= self.sigma {
            return 0;
        }
        count_rec(
            self.root.as_deref(),
            0,
            self.sigma,
            l,
            r,
            vlo,
            vhi.min(self.sigma - 1),
        )
    }

    /// Some position in `[l, r)` whose symbol lies in `[vlo, vhi]`.
    pub fn find_in_range(&self, l: usize, r: usize, vlo: u32, vhi: u32) -> Option<usize> {
        if l >= r || vlo > vhi || vlo >= self.sigma {
            return None;
        }
        find_rec(
            self.root.as_deref(),
            0,
            self.sigma,
            l,
            r,
            vlo,
            vhi.min(self.sigma - 1),
        )
    }

    /// Total bits stored across all levels.
    pub fn payload_bits(&self) -> usize {
        fn walk(n: Option<&Node>) -> usize {
            n.map_or(0, |n| {
                n.bits.len() + walk(n.left.as_deref()) + walk(n.right.as_deref())
            })
        }
        walk(self.root.as_deref())
    }
}

fn build(seq: Vec<u32>, lo: u32, hi: u32) -> Option<Box<Node>> {
    if hi - lo <= 1 {
        return None;
    }
    let mid = lo + (hi - lo) / 2;
    let bits = RankBitVec::from_bits(seq.iter().map(|&c| c >= mid));
    let (right, left): (Vec<u32>, Vec<u32>) = seq.into_iter().partition(|&c| c >= mid);
    Some(Box::new(Node {
        bits,
        left: build(left, lo, mid),
        right: build(right, mid, hi),
    }))
}

fn count_rec(
    node: Option<&Node>,
    lo: u32,
    hi: u32,
    l: usize,
    r: usize,
    vlo: u32,
    vhi: u32,
) -> usize {
    if l >= r || vhi < lo || vlo >= hi {
        return 0;
    }
    if vlo <= lo && hi - 1 <= vhi {
        return r - l;
    }
    let Some(n) = node else {
        // leaf range of one symbol, already known to intersect
        return r - l;
    };
    let mid = lo + (hi - lo) / 2;
    count_rec(
        n.left.as_deref(),
        lo,
        mid,
        n.bits.rank0(l),
        n.bits.rank0(r),
        vlo,
        vhi,
    ) + count_rec(
        n.right.as_deref(),
        mid,
        hi,
        n.bits.rank1(l),
        n.bits.rank1(r),
        vlo,
        vhi,
    )
}

fn find_rec(
    node: Option<&Node>,
    lo: u32,
    hi: u32,
    l: usize,
    r: usize,
    vlo: u32,
    vhi: u32,
) -> Option<usize> {
    if l >= r || vhi < lo || vlo >= hi {
        return None;
    }
    if vlo <= lo && hi - 1 <= vhi {
        return Some(l);
    }
    let n = node?;
    let mid = lo + (hi - lo) / 2;
    if let Some(p) = find_rec(
        n.left.as_deref(),
        lo,
        mid,
        n.bits.rank0(l),
        n.bits.rank0(r),
        vlo,
        vhi,
    ) {
        return n.bits.select0(p + 1);
    }
    let p = find_rec(
        n.right.as_deref(),
        mid,
        hi,
        n.bits.rank1(l),
        n.bits.rank1(r),
        vlo,
        vhi,
    )?;
    n.bits.select1(p + 1)
}
