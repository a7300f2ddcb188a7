//! Knuth-Morris-Pratt (1977). O(m) preprocessing, O(n) search with at most
//! 2n symbol comparisons; the text is read strictly left to right.

use super::{check_pattern, Matcher};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct Kmp {
    pattern: Vec<u8>,
    // failure[i]: length of the longest proper border of pattern[..i]
    failure: Vec<usize>,
}

impl Kmp {
    pub fn new(pattern: &[u8]) -> Result<Self> {
        check_pattern(pattern, None)?;
        let m = pattern.len();
        let mut failure = vec![0; m + 1];
        let mut k = 0;
        for i in 1..m {
            while k > 0 && pattern[k] != pattern[i] {
                k = failure[k];
            }
            if pattern[k] == pattern[i] {
                k += 1;
            }
            failure[i + 1] = k;
        }
        Ok(Kmp {
            pattern: pattern.to_vec(),
            failure,
        })
    }

    pub fn failure(&self) -> &[usize] {
        &self.failure
    }
}

pub struct Matches<'a> {
    kmp: &'a Kmp,
    text: &'a [u8],
    pos: usize,
    state: usize,
    comparisons: usize,
}

impl Matches<'_> {
    /// Symbol comparisons performed so far.
    pub fn comparisons(&self) -> usize {
        self.comparisons
    }
}

impl Iterator for Matches<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let p = &self.kmp.pattern;
        let m = p.len();
        while self.pos < self.text.len() {
            let c = self.text[self.pos];
            self.pos += 1;
            loop {
                self.comparisons += 1;
                if p[self.state] == c {
                    self.state += 1;
                    break;
                }
                if self.state == 0 {
                    break;
                }
                self.state = self.kmp.failure[self.state];
            }
            if self.state == m {
                self.state = self.kmp.failure[m];
                return Some(self.pos - m);
            }
        }
        None
    }
}

impl Matcher for Kmp {
    type Matches<'a> = Matches<'a>;

    fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    fn find_all<'a>(&'a self, text: &'a [u8]) -> Matches<'a> {
        Matches {
            kmp: self,
            text,
            pos: 0,
            state: 0,
            comparisons: 0,
        }
    }
}
