//! Rank/select over bit sequences using a practical two-level scheme:
//! cumulative popcounts are stored every `k` bits (one superblock
//! level), and the remainder is counted with word-level popcount.
//!
//! Rank costs one table lookup plus a scan of at most `k` bits; select is a
//! binary search over superblocks followed by an in-block scan,
//! O(log(m / k) + k). Extra space is one `usize` per `k` bits.
//!
//! Ranks are inclusive: `rank1(i)` counts set bits in `0..=i`.
//!
//! ```
//! use seqlib::bitrank::RankSelect;
//!
//! let rs = RankSelect::from_bits(&[true, false, true, true, false, false, true], 8).unwrap();
//! assert_eq!(rs.rank1(3).unwrap(), 3);
//! assert_eq!(rs.select1(4).unwrap(), 6);
//! ```

use crate::error::{Error, Result};

pub const DEFAULT_BLOCK_SIZE: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSelect {
    words: Vec<u64>,
    len: usize,
    block_size: usize,
    // superblocks[j] = set bits in [0, min(j * k, len))
    superblocks: Vec<usize>,
}

impl RankSelect {
    /// Build from packed words (bit `i` is `words[i / 64] >> (i % 64) & 1`) of
    /// which the first `len` bits are used.
    pub fn new(mut words: Vec<u64>, len: usize, block_size: usize) -> Result<Self> {
        if block_size == 0 {
            return Err(Error::InvalidParameter("block size must be at least 1"));
        }
        let needed = len.div_ceil(64);
        if words.len() < needed {
            return Err(Error::LengthMismatch {
                expected: needed,
                found: words.len(),
            });
        }
        words.truncate(needed);
        if !len.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % 64)) - 1;
            }
        }
        let mut rs = RankSelect {
            words,
            len,
            block_size,
            superblocks: Vec::new(),
        };
        let blocks = len.div_ceil(block_size);
        let mut superblocks = Vec::with_capacity(blocks + 1);
        let mut acc = 0;
        superblocks.push(0);
        for b in 0..blocks {
            let start = b * block_size;
            let end = (start + block_size).min(len);
            acc += rs.count_ones(start, end);
            superblocks.push(acc);
        }
        rs.superblocks = superblocks;
        Ok(rs)
    }

    pub fn from_bits(bits: &[bool], block_size: usize) -> Result<Self> {
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (i, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
            words[i / 64] |= 1 << (i % 64);
        }
        Self::new(words, bits.len(), block_size)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn ones(&self) -> usize {
        *self.superblocks.last().unwrap()
    }

    pub fn zeros(&self) -> usize {
        self.len - self.ones()
    }

    pub fn get(&self, i: usize) -> Result<bool> {
        self.check(i)?;
        Ok(self.bit(i))
    }

    #[inline]
    fn bit(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.len {
            Err(Error::OutOfBounds {
                index: i,
                len: self.len,
            })
        } else {
            Ok(())
        }
    }

    /// Set bits in `[from, to)`.
    fn count_ones(&self, from: usize, to: usize) -> usize {
        if from >= to {
            return 0;
        }
        let (first, last) = (from / 64, (to - 1) / 64);
        let lo_mask = u64::MAX << (from % 64);
        let hi_mask = u64::MAX >> (63 - (to - 1) % 64);
        if first == last {
            return (self.words[first] & lo_mask & hi_mask).count_ones() as usize;
        }
        let mut count = (self.words[first] & lo_mask).count_ones() as usize;
        count += self.words[first + 1..last]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>();
        count + (self.words[last] & hi_mask).count_ones() as usize
    }

    /// Number of set bits in positions `0..=i`.
    pub fn rank1(&self, i: usize) -> Result<usize> {
        self.check(i)?;
        let end = i + 1;
        let block = end / self.block_size;
        Ok(self.superblocks[block] + self.count_ones(block * self.block_size, end))
    }

    /// Number of unset bits in positions `0..=i`.
    pub fn rank0(&self, i: usize) -> Result<usize> {
        Ok(i + 1 - self.rank1(i)?)
    }

    /// Position of the `j`-th set bit (1-based), i.e. the smallest `i` with `rank1(i) = j`.
    pub fn select1(&self, j: usize) -> Result<usize> {
        self.select(j, true)
    }

    /// Position of the `j`-th unset bit (1-based).
    pub fn select0(&self, j: usize) -> Result<usize> {
        self.select(j, false)
    }

    fn before_block(&self, block: usize, ones: bool) -> usize {
        if ones {
            self.superblocks[block]
        } else {
            (block * self.block_size).min(self.len) - self.superblocks[block]
        }
    }

    fn select(&self, j: usize, ones: bool) -> Result<usize> {
        let available = if ones { self.ones() } else { self.zeros() };
        if j == 0 || j > available {
            return Err(Error::NotEnoughBits {
                requested: j,
                available,
            });
        }
        // last block whose prefix count is below j
        let blocks = self.superblocks.len() - 1;
        let (mut lo, mut hi) = (0, blocks);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.before_block(mid, ones) < j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut remaining = j - self.before_block(lo, ones);
        let start = lo * self.block_size;
        let end = (start + self.block_size).min(self.len);
        let mut pos = start;
        while pos < end {
            let word_end = ((pos / 64 + 1) * 64).min(end);
            let mut word = self.words[pos / 64] >> (pos % 64);
            if !ones {
                word = !word;
            }
            let width = word_end - pos;
            if width < 64 {
                word &= (1u64 << width) - 1;
            }
            let count = word.count_ones() as usize;
            if count >= remaining {
                for _ in 1..remaining {
                    word &= word - 1;
                }
                return Ok(pos + word.trailing_zeros() as usize);
            }
            remaining -= count;
            pos = word_end;
        }
        Err(Error::InternalConsistency(
            "select scan ran past its block".into(),
        ))
    }
}
