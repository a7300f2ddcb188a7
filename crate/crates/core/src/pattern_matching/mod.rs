//! Online exact pattern matching.
//!
//! Every matcher is built once from a pattern and can then search any number
//! of texts. Searches yield the start positions of all (possibly overlapping)
//! occurrences in ascending order, lazily.
//!
//! Which algorithm to use depends on pattern length and alphabet size:
//!
//! * [`Kmp`]: worst-case linear, never reads a text symbol twice; good for
//!   small alphabets and highly repetitive patterns.
//! * [`Horspool`]: simple and fast on large alphabets, where long shifts are likely.
//! * [`Bndm`]: bit-parallel suffix automaton, fast for short to medium patterns
//!   (up to 64 symbols) on any alphabet.
//! * [`Bom`]: factor-oracle based, efficient for long patterns on small alphabets.
//! * [`ShiftAnd`]: bit-parallel prefix automaton; reads every symbol but has a
//!   tight inner loop (patterns up to 64 symbols).
//! * [`Naive`]: quadratic worst case; the reference all others are tested against.
//!
//! ```
//! use seqlib::pattern_matching::{Bndm, Matcher};
//!
//! let bndm = Bndm::new(b"aba").unwrap();
//! assert_eq!(bndm.find_all(b"ababab").collect::<Vec<_>>(), [0, 2]);
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub mod bndm;
pub mod bom;
pub mod horspool;
pub mod kmp;
pub mod naive;
pub mod shift_and;

pub use bndm::Bndm;
pub use bom::Bom;
pub use horspool::Horspool;
pub use kmp::Kmp;
pub use naive::Naive;
pub use shift_and::ShiftAnd;

/// Maximum pattern length of the bit-parallel matchers.
pub const WORD_BITS: usize = 64;

/// Common interface of all exact matchers.
pub trait Matcher {
    type Matches<'a>: Iterator<Item = usize>
    where
        Self: 'a;

    fn pattern(&self) -> &[u8];

    /// Start positions of all occurrences in `text`.
    fn find_all<'a>(&'a self, text: &'a [u8]) -> Self::Matches<'a>;
}

pub(crate) fn check_pattern(pattern: &[u8], max_len: Option<usize>) -> Result<()> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    match max_len {
        Some(max) if pattern.len() > max => Err(Error::PatternTooLong {
            len: pattern.len(),
            max,
        }),
        _ => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Naive,
    Kmp,
    Horspool,
    Bndm,
    Bom,
    ShiftAnd,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Naive,
        Algorithm::Kmp,
        Algorithm::Horspool,
        Algorithm::Bndm,
        Algorithm::Bom,
        Algorithm::ShiftAnd,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Kmp => "kmp",
            Algorithm::Horspool => "horspool",
            Algorithm::Bndm => "bndm",
            Algorithm::Bom => "bom",
            Algorithm::ShiftAnd => "shift-and",
        }
    }

    /// Display name.
    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Naive => "Naive",
            Algorithm::Kmp => "KMP",
            Algorithm::Horspool => "Horspool",
            Algorithm::Bndm => "BNDM",
            Algorithm::Bom => "BOM",
            Algorithm::ShiftAnd => "Shift-And",
        }
    }

    pub fn max_pattern_len(self) -> Option<usize> {
        match self {
            Algorithm::Bndm | Algorithm::ShiftAnd => Some(WORD_BITS),
            _ => None,
        }
    }

    pub fn build(self, pattern: &[u8]) -> Result<AnyMatcher> {
        Ok(match self {
            Algorithm::Naive => AnyMatcher::Naive(Naive::new(pattern)?),
            Algorithm::Kmp => AnyMatcher::Kmp(Kmp::new(pattern)?),
            Algorithm::Horspool => AnyMatcher::Horspool(Horspool::new(pattern)?),
            Algorithm::Bndm => AnyMatcher::Bndm(Bndm::new(pattern)?),
            Algorithm::Bom => AnyMatcher::Bom(Bom::new(pattern)?),
            Algorithm::ShiftAnd => AnyMatcher::ShiftAnd(ShiftAnd::new(pattern)?),
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s) || a.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown algorithm '{s}'"))
    }
}

/// A matcher of any algorithm, for choosing the algorithm at runtime.
#[derive(Clone, Debug)]
pub enum AnyMatcher {
    Naive(Naive),
    Kmp(Kmp),
    Horspool(Horspool),
    Bndm(Bndm),
    Bom(Bom),
    ShiftAnd(ShiftAnd),
}

impl AnyMatcher {
    pub fn algorithm(&self) -> Algorithm {
        match self {
            AnyMatcher::Naive(_) => Algorithm::Naive,
            AnyMatcher::Kmp(_) => Algorithm::Kmp,
            AnyMatcher::Horspool(_) => Algorithm::Horspool,
            AnyMatcher::Bndm(_) => Algorithm::Bndm,
            AnyMatcher::Bom(_) => Algorithm::Bom,
            AnyMatcher::ShiftAnd(_) => Algorithm::ShiftAnd,
        }
    }
}

pub enum AnyMatches<'a> {
    Naive(naive::Matches<'a>),
    Kmp(kmp::Matches<'a>),
    Horspool(horspool::Matches<'a>),
    Bndm(bndm::Matches<'a>),
    Bom(bom::Matches<'a>),
    ShiftAnd(shift_and::Matches<'a>),
}

impl Iterator for AnyMatches<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            AnyMatches::Naive(m) => m.next(),
            AnyMatches::Kmp(m) => m.next(),
            AnyMatches::Horspool(m) => m.next(),
            AnyMatches::Bndm(m) => m.next(),
            AnyMatches::Bom(m) => m.next(),
            AnyMatches::ShiftAnd(m) => m.next(),
        }
    }
}

impl Matcher for AnyMatcher {
    type Matches<'a> = AnyMatches<'a>;

    fn pattern(&self) -> &[u8] {
        match self {
            AnyMatcher::Naive(m) => m.pattern(),
            AnyMatcher::Kmp(m) => m.pattern(),
            AnyMatcher::Horspool(m) => m.pattern(),
            AnyMatcher::Bndm(m) => m.pattern(),
            AnyMatcher::Bom(m) => m.pattern(),
            AnyMatcher::ShiftAnd(m) => m.pattern(),
        }
    }

    fn find_all<'a>(&'a self, text: &'a [u8]) -> AnyMatches<'a> {
        match self {
            AnyMatcher::Naive(m) => AnyMatches::Naive(m.find_all(text)),
            AnyMatcher::Kmp(m) => AnyMatches::Kmp(m.find_all(text)),
            AnyMatcher::Horspool(m) => AnyMatches::Horspool(m.find_all(text)),
            AnyMatcher::Bndm(m) => AnyMatches::Bndm(m.find_all(text)),
            AnyMatcher::Bom(m) => AnyMatches::Bom(m.find_all(text)),
            AnyMatcher::ShiftAnd(m) => AnyMatches::ShiftAnd(m.find_all(text)),
        }
    }
}
