//! Backward Nondeterministic DAWG Matching (Navarro and Raffinot 1998).
//!
//! Reads each window right to left while simulating the suffix automaton of
//! the reversed pattern in one machine word. Whenever the part read so far is a
//! pattern prefix, the window start is remembered as the next shift target.
//! O(σ + m) preprocessing, O(nm) worst case, O(n log_σ(m) / m) on average.
//! Patterns of up to 64 symbols.

use super::{check_pattern, Matcher, WORD_BITS};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct Bndm {
    pattern: Vec<u8>,
    // masks[c] has bit m-1-i set iff pattern[i] == c
    masks: [u64; 256],
    accept: u64,
    full: u64,
}

impl Bndm {
    pub fn new(pattern: &[u8]) -> Result<Self> {
        check_pattern(pattern, Some(WORD_BITS))?;
        let m = pattern.len();
        let mut masks = [0u64; 256];
        for (i, &c) in pattern.iter().enumerate() {
            masks[c as usize] |= 1 << (m - 1 - i);
        }
        Ok(Bndm {
            pattern: pattern.to_vec(),
            masks,
            accept: 1 << (m - 1),
            full: u64::MAX >> (WORD_BITS - m),
        })
    }

    pub fn mask(&self, c: u8) -> u64 {
        self.masks[c as usize]
    }
}

pub struct Matches<'a> {
    bndm: &'a Bndm,
    text: &'a [u8],
    pos: usize,
}

impl Iterator for Matches<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let b = self.bndm;
        let m = b.pattern.len();
        while self.pos + m <= self.text.len() {
            let window = &self.text[self.pos..self.pos + m];
            let mut j = m;
            let mut last = m;
            let mut active = b.full;
            let mut found = false;
            while active != 0 {
                active &= b.masks[window[j - 1] as usize];
                j -= 1;
                if active & b.accept != 0 {
                    if j > 0 {
                        last = j;
                    } else {
                        found = true;
                        break;
                    }
                }
                active = (active << 1) & b.full;
            }
            let pos = self.pos;
            self.pos += last;
            if found {
                return Some(pos);
            }
        }
        None
    }
}

impl Matcher for Bndm {
    type Matches<'a> = Matches<'a>;

    fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    fn find_all<'a>(&'a self, text: &'a [u8]) -> Matches<'a> {
        Matches {
            bndm: self,
            text,
            pos: 0,
        }
    }
}
