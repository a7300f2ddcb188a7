//! Myers' bit-vector algorithm (1999) for patterns of up to 64 symbols.
//!
//! Column j of the edit matrix is encoded by its vertical deltas: bit i of
//! `pv` (`mv`) is set iff `D[i+1][j] - D[i][j]` is +1 (-1). Each text symbol
//! updates both words in a constant number of word operations, and the score
//! `D[m][j]` is tracked through the horizontal delta of the last row.

use crate::error::{Error, Result};
use crate::pattern_matching::WORD_BITS;

#[derive(Clone, Debug)]
pub struct Myers {
    peq: [u64; 256],
    m: usize,
}

impl Myers {
    pub fn new(pattern: &[u8]) -> Result<Self> {
        if pattern.len() > WORD_BITS {
            return Err(Error::PatternTooLong {
                len: pattern.len(),
                max: WORD_BITS,
            });
        }
        let mut peq = [0u64; 256];
        for (i, &c) in pattern.iter().enumerate() {
            peq[c as usize] |= 1 << i;
        }
        Ok(Myers {
            peq,
            m: pattern.len(),
        })
    }

    pub fn find_all<'a>(&'a self, text: &'a [u8], k: usize) -> Matches<'a> {
        let full = if self.m == 64 {
            u64::MAX
        } else {
            (1u64 << self.m) - 1
        };
        Matches {
            myers: self,
            text,
            k,
            pv: full,
            mv: 0,
            score: self.m,
            last: if self.m == 0 { 0 } else { 1 << (self.m - 1) },
            pos: 0,
        }
    }
}

pub struct Matches<'a> {
    myers: &'a Myers,
    text: &'a [u8],
    k: usize,
    pv: u64,
    mv: u64,
    score: usize,
    last: u64,
    pos: usize,
}

impl Matches<'_> {
    #[inline]
    fn step(&mut self, c: u8) {
        let eq = self.myers.peq[c as usize];
        let (pv, mv) = (self.pv, self.mv);
        let xv = eq | mv;
        let xh = ((eq & pv).wrapping_add(pv) ^ pv) | eq;
        let mut ph = mv | !(xh | pv);
        let mut mh = pv & xh;
        if ph & self.last != 0 {
            self.score += 1;
        } else if mh & self.last != 0 {
            self.score -= 1;
        }
        // the top row is all zeros (free start in the text), so nothing is shifted in
        ph <<= 1;
        mh <<= 1;
        self.pv = mh | !(xv | ph);
        self.mv = ph & xv;
    }

    /// Bit masks of the current column's vertical deltas.
    pub fn deltas(&self) -> (u64, u64) {
        (self.pv, self.mv)
    }
}

impl Iterator for Matches<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        while self.pos < self.text.len() {
            let j = self.pos;
            self.pos += 1;
            if self.myers.m > 0 {
                self.step(self.text[j]);
            }
            if self.score <= self.k {
                return Some((j, self.score));
            }
        }
        None
    }
}

/// All `(end, distance)` pairs with distance ≤ k, see [`Myers`].
pub fn myers_find(pattern: &[u8], text: &[u8], k: usize) -> Result<Vec<(usize, usize)>> {
    Ok(Myers::new(pattern)?.find_all(text, k).collect())
}
