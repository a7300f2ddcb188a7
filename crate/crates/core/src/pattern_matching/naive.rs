//! Brute-force matcher, O(nm) worst case.

use super::{check_pattern, Matcher};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct Naive {
    pattern: Vec<u8>,
}

impl Naive {
    pub fn new(pattern: &[u8]) -> Result<Self> {
        check_pattern(pattern, None)?;
        Ok(Naive {
            pattern: pattern.to_vec(),
        })
    }
}

pub struct Matches<'a> {
    pattern: &'a [u8],
    text: &'a [u8],
    pos: usize,
}

impl Iterator for Matches<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let m = self.pattern.len();
        while self.pos + m <= self.text.len() {
            let pos = self.pos;
            self.pos += 1;
            if &self.text[pos..pos + m] == self.pattern {
                return Some(pos);
            }
        }
        None
    }
}

impl Matcher for Naive {
    type Matches<'a> = Matches<'a>;

    fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    fn find_all<'a>(&'a self, text: &'a [u8]) -> Matches<'a> {
        Matches {
            pattern: &self.pattern,
            text,
            pos: 0,
        }
    }
}
