//! Horspool (1980): compare the window, then shift by the distance of the
//! window's last symbol to its rightmost occurrence in `pattern[..m-1]`.
//! O(σ + m) preprocessing, O(nm) worst case, sublinear on average for large alphabets.

use super::{check_pattern, Matcher};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct Horspool {
    pattern: Vec<u8>,
    shift: [usize; 256],
}

impl Horspool {
    pub fn new(pattern: &[u8]) -> Result<Self> {
        check_pattern(pattern, None)?;
        let m = pattern.len();
        let mut shift = [m; 256];
        for (i, &c) in pattern[..m - 1].iter().enumerate() {
            shift[c as usize] = m - 1 - i;
        }
        Ok(Horspool {
            pattern: pattern.to_vec(),
            shift,
        })
    }

    pub fn shift(&self, c: u8) -> usize {
        self.shift[c as usize]
    }
}

pub struct Matches<'a> {
    horspool: &'a Horspool,
    text: &'a [u8],
    pos: usize,
}

impl Iterator for Matches<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let p = &self.horspool.pattern;
        let m = p.len();
        let last = p[m - 1];
        while self.pos + m <= self.text.len() {
            let pos = self.pos;
            let c = self.text[pos + m - 1];
            self.pos += self.horspool.shift[c as usize];
            if c == last && self.text[pos..pos + m - 1] == p[..m - 1] {
                return Some(pos);
            }
        }
        None
    }
}

impl Matcher for Horspool {
    type Matches<'a> = Matches<'a>;

    fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    fn find_all<'a>(&'a self, text: &'a [u8]) -> Matches<'a> {
        Matches {
            horspool: self,
            text,
            pos: 0,
        }
    }
}
