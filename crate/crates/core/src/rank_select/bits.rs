//! Plain bitvector with a two-level rank directory.
//!
//! Superblocks span 512 bits (8 words) and store absolute ranks; each word
//! stores its rank relative to the enclosing superblock. Select binary
//! searches the superblock directory, then scans at most eight words.

const WORD: usize = 64;
const WORDS_PER_SUPER: usize = 8;

#[derive(Debug, Clone, Default)]
pub struct RankBitVec {
    words: Vec<u64>,
    supers: Vec<u64>,
    blocks: Vec<u16>,
    len: usize,
    ones: usize,
}

impl RankBitVec {
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % WORD == 0 {
                words.push(0u64);
            }
            if bit {
                *words.last_mut().unwrap() |= 1 << (len % WORD);
            }
            len += 1;
        }
        let mut supers = Vec::with_capacity(words.len() / WORDS_PER_SUPER + 1);
        let mut blocks = Vec::with_capacity(words.len());
        let mut total = 0u64;
        let mut in_super = 0u16;
        for (w, word) in words.iter().enumerate() {
            if w % WORDS_PER_SUPER == 0 {
                supers.push(total);
                in_super = 0;
            }
            blocks.push(in_super);
            let c = word.count_ones();
            in_super += c as u16;
            total += c as u64;
        }
        RankBitVec {
            words,
            supers,
            blocks,
            len,
            ones: total as usize,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    /// Number of set bits in `[0, i)`.
    #[inline]
    pub fn rank1(&self, i: usize) -> usize {
        debug_assert!(i <= self.len);
        if i == self.len {
            return self.ones;
        }
        let w = i / WORD;
        let mask = (1u64 << (i % WORD)) - 1;
        self.supers[w / WORDS_PER_SUPER] as usize
            + self.blocks[w] as usize
            + (self.words[w] & mask).count_ones() as usize
    }

    /// Number of clear bits in `[0, i)`.
    #[inline]
    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    pub fn count_ones(&self) -> usize {
        self.ones
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.ones
    }

    /// Position of the `k`-th set bit, `k` 1-based.
    pub fn select1(&self, k: usize) -> Option<usize> {
        if k == 0 || k > self.count_ones() {
            return None;
        }
        Some(self.select_by(
            k,
            |s| self.supers[s] as usize,
            |w| (self.blocks[w] as usize, self.words[w]),
        ))
    }

    /// Position of the `k`-th clear bit, `k` 1-based.
    pub fn select0(&self, k: usize) -> Option<usize> {
        if k == 0 || k > self.count_zeros() {
            return None;
        }
        let bits_per_super = WORD * WORDS_PER_SUPER;
        Some(self.select_by(
            k,
            |s| s * bits_per_super - self.supers[s] as usize,
            |w| {
                let rel = (w % WORDS_PER_SUPER) * WORD - self.blocks[w] as usize;
                let mut word = !self.words[w];
                // mask off padding past the end
                let valid = self.len.saturating_sub(w * WORD).min(WORD);
                if valid < WORD {
                    word &= (1u64 << valid) - 1;
                }
                (rel, word)
            },
        ))
    }

    fn select_by(
        &self,
        k: usize,
        super_rank: impl Fn(usize) -> usize,
        word_info: impl Fn(usize) -> (usize, u64),
    ) -> usize {
        // last superblock whose absolute rank is < k
        let (mut lo, mut hi) = (0, self.supers.len());
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if super_rank(mid) < k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let base = super_rank(lo);
        let first = lo * WORDS_PER_SUPER;
        let last = (first + WORDS_PER_SUPER).min(self.words.len());
        let mut w = first;
        while w + 1 < last && base + word_info(w + 1).0 < k {
            w += 1;
        }
        let (rel, word) = word_info(w);
        w * WORD + select_in_word(word, k - base - rel)
    }
}

/// Offset of the `k`-th set bit of `word`, `k` 1-based.
#[inline]
fn select_in_word(mut word: u64, k: usize) -> usize {
    for _ in 1..k {
        word &= word - 1;
    }
    word.trailing_zeros() as usize
}
