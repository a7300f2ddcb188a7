//! Backward Oracle Matching (Allauzen, Crochemore and Raffinot 1999).
//!
//! Windows are read right to left through the factor oracle of the reversed
//! pattern. The oracle accepts every factor of the pattern (and possibly some
//! other strings), so a failed transition proves that no occurrence starts at
//! or before the failing symbol; a fully read window is verified directly.
//! O(mσ) preprocessing with a dense transition table, O(nm) worst case.

use super::{check_pattern, Matcher};
use crate::error::Result;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Bom {
    pattern: Vec<u8>,
    // transitions[state * 256 + symbol]
    transitions: Vec<u32>,
}

impl Bom {
    pub fn new(pattern: &[u8]) -> Result<Self> {
        check_pattern(pattern, None)?;
        let m = pattern.len();
        let mut transitions = vec![NONE; (m + 1) * 256];
        // supply[i]: the state reached by the longest suffix of the first i
        // symbols that is read along a different path
        let mut supply: Vec<Option<usize>> = vec![None; m + 1];
        for (i, &c) in pattern.iter().rev().enumerate() {
            let next = i + 1;
            transitions[i * 256 + c as usize] = next as u32;
            let mut k = supply[i];
            while let Some(s) = k {
                let t = &mut transitions[s * 256 + c as usize];
                if *t != NONE {
                    break;
                }
                *t = next as u32;
                k = supply[s];
            }
            supply[next] = Some(match k {
                Some(s) => transitions[s * 256 + c as usize] as usize,
                None => 0,
            });
        }
        Ok(Bom {
            pattern: pattern.to_vec(),
            transitions,
        })
    }

    #[inline]
    fn delta(&self, state: usize, c: u8) -> Option<usize> {
        match self.transitions[state * 256 + c as usize] {
            NONE => None,
            s => Some(s as usize),
        }
    }

    /// Whether the oracle reads `word` (given in pattern orientation) back to front.
    pub fn accepts_reversed(&self, word: &[u8]) -> bool {
        word.iter()
            .rev()
            .try_fold(0, |state, &c| self.delta(state, c))
            .is_some()
    }
}

pub struct Matches<'a> {
    bom: &'a Bom,
    text: &'a [u8],
    pos: usize,
}

impl Iterator for Matches<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let p = &self.bom.pattern;
        let m = p.len();
        while self.pos + m <= self.text.len() {
            let window = &self.text[self.pos..self.pos + m];
            let mut state = 0;
            let mut j = m;
            while j > 0 {
                match self.bom.delta(state, window[j - 1]) {
                    Some(s) => {
                        state = s;
                        j -= 1;
                    }
                    None => break,
                }
            }
            let pos = self.pos;
            if j == 0 {
                self.pos += 1;
                if window == p.as_slice() {
                    return Some(pos);
                }
            } else {
                self.pos += j;
            }
        }
        None
    }
}

impl Matcher for Bom {
    type Matches<'a> = Matches<'a>;

    fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    fn find_all<'a>(&'a self, text: &'a [u8]) -> Matches<'a> {
        Matches {
            bom: self,
            text,
            pos: 0,
        }
    }
}
