//! Shift-And (Baeza-Yates and Gonnet 1992; Wu and Manber 1992): simulates the
//! nondeterministic prefix automaton of the pattern in one machine word.
//! O(σ + m) preprocessing, O(n) search, patterns of up to 64 symbols.

use super::{check_pattern, Matcher, WORD_BITS};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct ShiftAnd {
    pattern: Vec<u8>,
    // masks[c] has bit i set iff pattern[i] == c
    masks: [u64; 256],
    accept: u64,
}

impl ShiftAnd {
    pub fn new(pattern: &[u8]) -> Result<Self> {
        check_pattern(pattern, Some(WORD_BITS))?;
        let mut masks = [0u64; 256];
        for (i, &c) in pattern.iter().enumerate() {
            masks[c as usize] |= 1 << i;
        }
        Ok(ShiftAnd {
            pattern: pattern.to_vec(),
            masks,
            accept: 1 << (pattern.len() - 1),
        })
    }

    pub fn mask(&self, c: u8) -> u64 {
        self.masks[c as usize]
    }
}

pub struct Matches<'a> {
    shift_and: &'a ShiftAnd,
    text: &'a [u8],
    pos: usize,
    active: u64,
}

impl Iterator for Matches<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let sa = self.shift_and;
        while self.pos < self.text.len() {
            let c = self.text[self.pos];
            self.pos += 1;
            self.active = ((self.active << 1) | 1) & sa.masks[c as usize];
            if self.active & sa.accept != 0 {
                return Some(self.pos - sa.pattern.len());
            }
        }
        None
    }
}

impl Matcher for ShiftAnd {
    type Matches<'a> = Matches<'a>;

    fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    fn find_all<'a>(&'a self, text: &'a [u8]) -> Matches<'a> {
        Matches {
            shift_and: self,
            text,
            pos: 0,
            active: 0,
        }
    }
}
