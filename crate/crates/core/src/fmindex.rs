//! The FM-index (Ferragina and Manzini 2000) for counting and locating
//! pattern occurrences by backward search over the BWT, and the FMD-index
//! (Li 2012) for supermaximal exact matches (SMEMs) against a DNA text and its
//! reverse complement.
//!
//! Intervals are half-open ranges of suffix array rows. The occurrence table
//! is inclusive, `occ(r, c) = #c in bwt[0..=r]`, with `occ(-1, c) = 0`.
//!
//! ```
//! use seqlib::alphabets::dna;
//! use seqlib::fmindex::FmIndex;
//! use seqlib::suffix::{bwt, suffix_array};
//!
//! let text = b"GCCTTAACATTATTACGCCTA$";
//! let alphabet = dna::iupac_alphabet();
//! let pos = suffix_array(text).unwrap();
//! let bwt = bwt(text, &pos).unwrap();
//! let fmindex = FmIndex::new(bwt, 3, &alphabet).unwrap();
//!
//! let interval = fmindex.backward_search(b"TTA".iter()).unwrap();
//! let mut positions = interval.occ(&pos).unwrap();
//! positions.sort();
//! assert_eq!(positions, [3, 9, 12]);
//! ```

use std::mem;

use crate::alphabets::{dna, Alphabet};
use crate::error::{Error, Result};
use crate::suffix::{self, Bwt, Less, Occ, SuffixArray, DEFAULT_SENTINEL};

/// Half-open interval `[lower, upper)` of suffix array rows.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SearchInterval {
    pub lower: usize,
    pub upper: usize,
}

impl SearchInterval {
    pub fn size(&self) -> usize {
        self.upper - self.lower
    }

    pub fn is_empty(&self) -> bool {
        self.upper == self.lower
    }

    /// Text positions of the rows in this interval, in suffix array row order.
    pub fn occ(&self, sa: &SuffixArray) -> Result<Vec<usize>> {
        if self.lower > self.upper || self.upper > sa.len() {
            return Err(Error::IndexTextMismatch);
        }
        Ok(sa[self.lower..self.upper].to_vec())
    }
}

#[derive(Clone, Debug)]
pub struct FmIndex {
    bwt: Bwt,
    less: Less,
    occ: Occ,
    alphabet: Alphabet,
}

impl FmIndex {
    /// Build an FM-index with an occurrence table sampled every `sampling_rate`
    /// rows. The BWT may contain sentinels (symbols smaller than every
    /// alphabet symbol) in addition to alphabet symbols.
    pub fn new(bwt: Bwt, sampling_rate: usize, alphabet: &Alphabet) -> Result<Self> {
        let less = suffix::less(&bwt, alphabet)?;
        let occ = Occ::new(&bwt, sampling_rate, alphabet)?;
        let mut alphabet = alphabet.clone();
        for &c in bwt.iter() {
            alphabet.insert(c);
        }
        Ok(FmIndex {
            bwt,
            less,
            occ,
            alphabet,
        })
    }

    /// Index `text` (which must not contain the sentinel `$`) over the symbols it uses.
    pub fn from_text(text: &[u8], sampling_rate: usize) -> Result<(Self, SuffixArray)> {
        let mut t = Vec::with_capacity(text.len() + 1);
        t.extend_from_slice(text);
        t.push(DEFAULT_SENTINEL);
        let sa = suffix::suffix_array(&t)?;
        let bwt = suffix::bwt(&t, &sa)?;
        let alphabet = Alphabet::new(text).or_else(|_| Alphabet::new(&[DEFAULT_SENTINEL]))?;
        Ok((FmIndex::new(bwt, sampling_rate, &alphabet)?, sa))
    }

    pub fn bwt(&self) -> &Bwt {
        &self.bwt
    }

    pub fn len(&self) -> usize {
        self.bwt.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bwt.is_empty()
    }

    #[inline]
    pub fn less(&self, c: u8) -> usize {
        self.less.get(c)
    }

    /// `#c in bwt[0..=r]`.
    #[inline]
    pub fn occ(&self, r: usize, c: u8) -> usize {
        self.occ.get(&self.bwt, r, c)
    }

    /// `occ(i - 1, c)` with `occ(-1, c) = 0`: the number of `c` in `bwt[..i]`.
    #[inline]
    fn occ_before(&self, i: usize, c: u8) -> usize {
        if i == 0 {
            0
        } else {
            self.occ(i - 1, c)
        }
    }

    /// LF mapping: the row of the suffix starting one position earlier.
    pub fn lf(&self, r: usize) -> usize {
        let c = self.bwt[r];
        self.less(c) + self.occ(r, c) - 1
    }

    /// Suffix array interval of all rows prefixed by `pattern`. Symbols are
    /// consumed right to left.
    pub fn backward_search<'a, P>(&self, pattern: P) -> Result<SearchInterval>
    where
        P: IntoIterator<Item = &'a u8>,
        P::IntoIter: DoubleEndedIterator + ExactSizeIterator,
    {
        let symbols = pattern.into_iter();
        let m = symbols.len();
        let (mut lower, mut upper) = (0, self.bwt.len());
        for (i, &c) in symbols.rev().enumerate() {
            if !self.alphabet.contains(c) {
                return Err(Error::SymbolNotInAlphabet(m - 1 - i));
            }
            if lower < upper {
                lower = self.less(c) + self.occ_before(lower, c);
                upper = self.less(c) + self.occ_before(upper, c);
            }
        }
        if lower >= upper {
            upper = lower;
        }
        Ok(SearchInterval { lower, upper })
    }
}

/// An interval of the FMD-index: `lower` for the pattern, `lower_rev` for its
/// reverse complement, both of `size` rows.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiInterval {
    pub lower: usize,
    pub lower_rev: usize,
    pub size: usize,
    pub match_len: usize,
}

impl BiInterval {
    pub fn forward(&self) -> SearchInterval {
        SearchInterval {
            lower: self.lower,
            upper: self.lower + self.size,
        }
    }

    pub fn revcomp(&self) -> SearchInterval {
        SearchInterval {
            lower: self.lower_rev,
            upper: self.lower_rev + self.size,
        }
    }

    fn swapped(self) -> Self {
        BiInterval {
            lower: self.lower_rev,
            lower_rev: self.lower,
            ..self
        }
    }
}

/// A supermaximal exact match of `pattern[pattern_start..pattern_end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Smem {
    pub pattern_start: usize,
    pub pattern_end: usize,
    pub interval: BiInterval,
}

impl Smem {
    pub fn len(&self) -> usize {
        self.pattern_end - self.pattern_start
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strand {
    Forward,
    Reverse,
}

/// An occurrence in the indexed text: on the forward strand `pos` is a text
/// position, on the reverse strand a position in the reverse complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hit {
    pub strand: Strand,
    pub pos: usize,
}

/// Symbols in the order in which the reverse-complement sub-intervals of a
/// backward extension are laid out: sentinel first, then complements of A<C<G<N<T.
const EXTENSION_ORDER: [u8; 6] = [DEFAULT_SENTINEL, b'T', b'G', b'C', b'N', b'A'];

/// FMD-index over `text $ revcomp(text) $`.
#[derive(Clone, Debug)]
pub struct FmdIndex {
    fm: FmIndex,
    sa: SuffixArray,
    text_len: usize,
}

impl FmdIndex {
    pub const DEFAULT_SAMPLING_RATE: usize = 32;

    /// Index a DNA text over `{A, C, G, T, N}`.
    pub fn new(text: &[u8]) -> Result<Self> {
        Self::with_sampling_rate(text, Self::DEFAULT_SAMPLING_RATE)
    }

    pub fn with_sampling_rate(text: &[u8], sampling_rate: usize) -> Result<Self> {
        let alphabet = Alphabet::new(b"ACGNT").unwrap();
        if let Some(i) = alphabet.first_foreign(text) {
            return Err(Error::SymbolNotInAlphabet(i));
        }
        let rc = dna::revcomp(text)?;
        let n = text.len();

        // ranks: final sentinel 0, inner sentinel 1, then A C G N T; the two
        // sentinels become distinct symbols for sorting only
        let rank = |c: u8| match c {
            b'A' => 2,
            b'C' => 3,
            b'G' => 4,
            b'N' => 5,
            _ => 6,
        };
        let mut ranked = Vec::with_capacity(2 * n + 2);
        ranked.extend(text.iter().map(|&c| rank(c)));
        ranked.push(1);
        ranked.extend(rc.iter().map(|&c| rank(c)));
        ranked.push(0);
        let sa = SuffixArray::from_positions(suffix::sais(&ranked, 7));

        let mut concat = Vec::with_capacity(2 * n + 2);
        concat.extend_from_slice(text);
        concat.push(DEFAULT_SENTINEL);
        concat.extend_from_slice(&rc);
        concat.push(DEFAULT_SENTINEL);
        let bwt = suffix::bwt(&concat, &sa)?;
        let fm = FmIndex::new(bwt, sampling_rate, &alphabet)?;
        Ok(FmdIndex {
            fm,
            sa,
            text_len: n,
        })
    }

    pub fn fmindex(&self) -> &FmIndex {
        &self.fm
    }

    pub fn suffix_array(&self) -> &SuffixArray {
        &self.sa
    }

    /// Length of the forward text.
    pub fn text_len(&self) -> usize {
        self.text_len
    }

    /// Interval of the single symbol `a` (and of its complement).
    pub fn init_interval_with(&self, a: u8) -> BiInterval {
        let comp = dna::complement(a).unwrap_or(a);
        let total = self.fm.len();
        let count = if total == 0 {
            0
        } else {
            self.fm.occ(total - 1, a)
        };
        BiInterval {
            lower: self.fm.less(a),
            lower_rev: self.fm.less(comp),
            size: count,
            match_len: 1,
        }
    }

    /// Interval of the empty pattern: all rows.
    pub fn init_interval(&self) -> BiInterval {
        BiInterval {
            lower: 0,
            lower_rev: 0,
            size: self.fm.len(),
            match_len: 0,
        }
    }

    /// Extend the match by prepending `a`.
    pub fn backward_ext(&self, interval: &BiInterval, a: u8) -> BiInterval {
        let mut lower_rev = interval.lower_rev;
        for &b in &EXTENSION_ORDER {
            let (before, size) = if interval.size == 0 {
                (0, 0)
            } else {
                let before = self.fm.occ_before(interval.lower, b);
                let upto = self.fm.occ(interval.lower + interval.size - 1, b);
                (before, upto - before)
            };
            if b == a {
                return BiInterval {
                    lower: self.fm.less(a) + before,
                    lower_rev,
                    size,
                    match_len: interval.match_len + 1,
                };
            }
            lower_rev += size;
        }
        // symbol outside the index: no occurrences
        BiInterval {
            lower: 0,
            lower_rev: 0,
            size: 0,
            match_len: interval.match_len + 1,
        }
    }

    /// Extend the match by appending `a`.
    pub fn forward_ext(&self, interval: &BiInterval, a: u8) -> BiInterval {
        let comp = dna::complement(a).unwrap_or(a);
        self.backward_ext(&interval.swapped(), comp).swapped()
    }

    fn check_pattern(pattern: &[u8]) -> Result<()> {
        match pattern
            .iter()
            .position(|c| !matches!(c, b'A' | b'C' | b'G' | b'T' | b'N'))
        {
            Some(i) => Err(Error::SymbolNotInAlphabet(i)),
            None => Ok(()),
        }
    }

    /// All SMEMs of `pattern` that cover position `start`, ordered by
    /// decreasing start. Two passes: forward extension from `start`
    /// remembering the interval before every size change, then backward
    /// extension of those candidates.
    pub fn smems(&self, pattern: &[u8], start: usize) -> Result<Vec<Smem>> {
        if start >= pattern.len() {
            return Err(Error::OutOfBounds {
                index: start,
                len: pattern.len(),
            });
        }
        Self::check_pattern(pattern)?;

        let mut interval = self.init_interval_with(pattern[start]);
        if interval.size == 0 {
            return Ok(Vec::new());
        }
        // candidates as (interval, end): longest match (smallest interval) last
        let mut prev: Vec<(BiInterval, usize)> = Vec::new();
        let mut end = start + 1;
        for &a in &pattern[start + 1..] {
            let extended = self.forward_ext(&interval, a);
            if extended.size != interval.size {
                prev.push((interval, end));
            }
            if extended.size == 0 {
                break;
            }
            interval = extended;
            end += 1;
        }
        if prev.last().map(|&(_, e)| e) != Some(end) {
            prev.push((interval, end));
        }
        prev.reverse();

        let mut curr: Vec<(BiInterval, usize)> = Vec::new();
        let mut matches = Vec::new();
        // start of the most recent reported match; later ones must begin strictly earlier
        let mut last_start = usize::MAX;
        for k in (0..=start).rev() {
            // extend to pattern[k - 1], or report everything at the pattern start
            let a = if k == 0 { None } else { Some(pattern[k - 1]) };
            curr.clear();
            let mut last_size = None;
            for &(iv, end) in &prev {
                let extended = match a {
                    Some(a) => self.backward_ext(&iv, a),
                    None => BiInterval::default(),
                };
                if extended.size == 0 && curr.is_empty() && k < last_start {
                    last_start = k;
                    matches.push(Smem {
                        pattern_start: k,
                        pattern_end: end,
                        interval: iv,
                    });
                }
                if extended.size != 0 && Some(extended.size) != last_size {
                    last_size = Some(extended.size);
                    curr.push((extended, end));
                }
            }
            if curr.is_empty() {
                break;
            }
            mem::swap(&mut curr, &mut prev);
        }
        Ok(matches)
    }

    /// All SMEMs of `pattern`, ordered by start position.
    pub fn all_smems(&self, pattern: &[u8]) -> Result<Vec<Smem>> {
        Self::check_pattern(pattern)?;
        let mut all = Vec::new();
        let mut i = 0;
        while i < pattern.len() {
            let mut found = self.smems(pattern, i)?;
            // the next SMEM not covering i must cover the furthest end seen here
            let next = found.iter().map(|s| s.pattern_end).max().unwrap_or(i + 1);
            found.reverse();
            all.append(&mut found);
            i = next.max(i + 1);
        }
        Ok(all)
    }

    /// Occurrences of the interval's match in the text and in its reverse complement.
    pub fn locate(&self, interval: &BiInterval) -> Vec<Hit> {
        let n = self.text_len;
        self.sa[interval.lower..interval.lower + interval.size]
            .iter()
            .map(|&p| {
                if p < n {
                    Hit {
                        strand: Strand::Forward,
                        pos: p,
                    }
                } else {
                    Hit {
                        strand: Strand::Reverse,
                        pos: p - n - 1,
                    }
                }
            })
            .collect()
    }
}

/// Build an FMD-index, see [`FmdIndex::new`].
pub fn fmd_build(text: &[u8]) -> Result<FmdIndex> {
    FmdIndex::new(text)
}
