//! Suffix array construction by induced sorting (SA-IS, Nong, Zhang and Chan 2009),
//! the Burrows-Wheeler transform, and the `less`/`occ` tables of FM search.
//!
//! Texts must end with a unique sentinel (`$` by default) that is smaller than
//! every other symbol. The text is rank-transformed before sorting, so the
//! recursion works on dense integer alphabets regardless of the input bytes.
//!
//! Complexity: O(n) time for the suffix array and the BWT, O(n σ / k) space for
//! an occurrence table with sampling rate k.
//!
//! ```
//! use seqlib::alphabets::Alphabet;
//! use seqlib::suffix::{bwt, less, suffix_array, Occ};
//!
//! let text = b"banana$";
//! let sa = suffix_array(text).unwrap();
//! assert_eq!(sa.as_slice(), &[6, 5, 3, 1, 0, 4, 2]);
//! let bwt = bwt(text, &sa).unwrap();
//! assert_eq!(bwt.as_slice(), b"annb$aa");
//!
//! let alphabet = Alphabet::new(b"abn").unwrap();
//! let less = less(&bwt, &alphabet).unwrap();
//! let occ = Occ::new(&bwt, 3, &alphabet).unwrap();
//! assert_eq!(less.get(b'n'), 5);
//! assert_eq!(occ.get(&bwt, 6, b'a'), 3);
//! ```

use std::ops::Deref;

use crate::alphabets::Alphabet;
use crate::error::{Error, Result};

pub const DEFAULT_SENTINEL: u8 = b'$';

/// Suffix array: text positions in lexicographical order of their suffixes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixArray(Vec<usize>);

impl SuffixArray {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub(crate) fn from_positions(pos: Vec<usize>) -> Self {
        SuffixArray(pos)
    }
}

impl Deref for SuffixArray {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Burrows-Wheeler transform of a sentinel-terminated text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bwt(Vec<u8>);

impl Bwt {
    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// Wrap bytes that are already a BWT. Validation happens where the BWT is used.
    pub fn from_vec(bytes: Vec<u8>) -> Self {
        Bwt(bytes)
    }
}

impl Deref for Bwt {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

/// Suffix array of `text`, which must end with the default sentinel `$`.
pub fn suffix_array(text: &[u8]) -> Result<SuffixArray> {
    suffix_array_with_sentinel(text, DEFAULT_SENTINEL)
}

pub fn suffix_array_with_sentinel(text: &[u8], sentinel: u8) -> Result<SuffixArray> {
    check_sentinel(text, sentinel)?;
    let mut present = [false; 256];
    for &c in text {
        present[c as usize] = true;
    }
    let mut ranks = [0usize; 256];
    let mut sigma = 0;
    for c in 0..256 {
        if present[c] {
            ranks[c] = sigma;
            sigma += 1;
        }
    }
    let ranked: Vec<usize> = text.iter().map(|&c| ranks[c as usize]).collect();
    Ok(SuffixArray(sais(&ranked, sigma)))
}

fn check_sentinel(text: &[u8], sentinel: u8) -> Result<()> {
    match text.split_last() {
        Some((&last, rest)) if last == sentinel => {
            if rest.iter().any(|&c| c <= sentinel) {
                Err(Error::InvalidSentinel)
            } else {
                Ok(())
            }
        }
        _ => Err(Error::InvalidSentinel),
    }
}

const EMPTY: usize = usize::MAX;

/// SA-IS over an integer text whose last symbol is a unique minimum.
pub(crate) fn sais(text: &[usize], sigma: usize) -> Vec<usize> {
    let n = text.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return vec![1, 0],
        _ => {}
    }

    // S-type: suffix i is smaller than suffix i+1
    let mut stype = vec![false; n];
    stype[n - 1] = true;
    for i in (0..n - 1).rev() {
        stype[i] = text[i] < text[i + 1] || (text[i] == text[i + 1] && stype[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];

    let mut counts = vec![0usize; sigma];
    for &c in text {
        counts[c] += 1;
    }
    let bucket_heads = || {
        let mut acc = 0;
        counts
            .iter()
            .map(|&c| {
                let h = acc;
                acc += c;
                h
            })
            .collect::<Vec<_>>()
    };
    let bucket_tails = || {
        let mut acc = 0;
        counts
            .iter()
            .map(|&c| {
                acc += c;
                acc
            })
            .collect::<Vec<_>>()
    };

    let induce = |sa: &mut [usize]| {
        let mut heads = bucket_heads();
        for i in 0..n {
            let j = sa[i];
            if j != EMPTY && j > 0 && !stype[j - 1] {
                let c = text[j - 1];
                sa[heads[c]] = j - 1;
                heads[c] += 1;
            }
        }
        let mut tails = bucket_tails();
        for i in (0..n).rev() {
            let j = sa[i];
            if j != EMPTY && j > 0 && stype[j - 1] {
                let c = text[j - 1];
                tails[c] -= 1;
                sa[tails[c]] = j - 1;
            }
        }
    };

    // sort LMS substrings
    let mut sa = vec![EMPTY; n];
    let mut tails = bucket_tails();
    for i in (1..n).filter(|&i| is_lms(i)) {
        let c = text[i];
        tails[c] -= 1;
        sa[tails[c]] = i;
    }
    induce(&mut sa);

    let lms_equal = |p: usize, q: usize| {
        if p == n - 1 || q == n - 1 {
            return p == q;
        }
        let mut k = 0;
        loop {
            if text[p + k] != text[q + k] || stype[p + k] != stype[q + k] {
                return false;
            }
            if k > 0 {
                let (a, b) = (is_lms(p + k), is_lms(q + k));
                if a || b {
                    return a && b;
                }
            }
            k += 1;
        }
    };

    // name LMS substrings in sorted order
    let mut names = vec![EMPTY; n];
    let mut name = 0;
    let mut prev: Option<usize> = None;
    for &p in sa.iter().filter(|&&p| is_lms(p)) {
        if let Some(q) = prev {
            if !lms_equal(p, q) {
                name += 1;
            }
        }
        names[p] = name;
        prev = Some(p);
    }
    let lms_positions: Vec<usize> = (1..n).filter(|&i| is_lms(i)).collect();
    let reduced: Vec<usize> = lms_positions.iter().map(|&p| names[p]).collect();

    let reduced_sa = if name + 1 < reduced.len() {
        sais(&reduced, name + 1)
    } else {
        // all names unique: the order is given directly by the names
        let mut rsa = vec![0; reduced.len()];
        for (i, &r) in reduced.iter().enumerate() {
            rsa[r] = i;
        }
        rsa
    };

    // place the sorted LMS suffixes and induce the rest
    sa.fill(EMPTY);
    let mut tails = bucket_tails();
    for &r in reduced_sa.iter().rev() {
        let p = lms_positions[r];
        let c = text[p];
        tails[c] -= 1;
        sa[tails[c]] = p;
    }
    induce(&mut sa);
    sa
}

/// `bwt[i] = text[(sa[i] + n - 1) mod n]`.
pub fn bwt(text: &[u8], sa: &SuffixArray) -> Result<Bwt> {
    let n = text.len();
    if sa.len() != n {
        return Err(Error::IndexTextMismatch);
    }
    sa.iter()
        .map(|&p| {
            if p >= n {
                Err(Error::IndexTextMismatch)
            } else {
                Ok(text[(p + n - 1) % n])
            }
        })
        .collect::<Result<Vec<u8>>>()
        .map(Bwt)
}

/// Reconstruct the text from its BWT by walking the LF mapping.
pub fn invert_bwt(bwt: &[u8]) -> Result<Vec<u8>> {
    invert_bwt_with_sentinel(bwt, DEFAULT_SENTINEL)
}

pub fn invert_bwt_with_sentinel(bwt: &[u8], sentinel: u8) -> Result<Vec<u8>> {
    let n = bwt.len();
    let mut sentinels = 0;
    let mut counts = [0usize; 256];
    for &c in bwt {
        if c == sentinel {
            sentinels += 1;
        } else if c < sentinel {
            return Err(Error::InvalidSentinel);
        }
        counts[c as usize] += 1;
    }
    if sentinels != 1 {
        return Err(Error::InvalidSentinel);
    }
    let mut less = [0usize; 256];
    let mut acc = 0;
    for c in 0..256 {
        less[c] = acc;
        acc += counts[c];
    }
    // lf[i] = less[c] + (number of c in bwt[..i])
    let mut seen = [0usize; 256];
    let lf: Vec<usize> = bwt
        .iter()
        .map(|&c| {
            let r = less[c as usize] + seen[c as usize];
            seen[c as usize] += 1;
            r
        })
        .collect();

    let mut text = vec![0u8; n];
    text[n - 1] = sentinel;
    // row 0 is the suffix consisting of the sentinel alone
    let mut row = 0;
    for k in (0..n - 1).rev() {
        let c = bwt[row];
        if c == sentinel {
            return Err(Error::InvalidSentinel);
        }
        text[k] = c;
        row = lf[row];
    }
    if bwt[row] != sentinel {
        return Err(Error::InvalidSentinel);
    }
    Ok(text)
}

/// For each byte `c`, the number of BWT symbols strictly smaller than `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Less {
    less: Vec<usize>,
}

impl Less {
    #[inline]
    pub fn get(&self, c: u8) -> usize {
        self.less[c as usize]
    }
}

/// Build the less table of `bwt`. Symbols other than those in `alphabet` are
/// only allowed if they are smaller than every alphabet symbol (sentinels).
pub fn less(bwt: &Bwt, alphabet: &Alphabet) -> Result<Less> {
    let mut counts = [0usize; 256];
    for (i, &c) in bwt.iter().enumerate() {
        if !alphabet.contains(c) && !is_sentinel_for(c, alphabet) {
            return Err(Error::SymbolNotInAlphabet(i));
        }
        counts[c as usize] += 1;
    }
    let mut less = vec![0; 257];
    for c in 0..256 {
        less[c + 1] = less[c] + counts[c];
    }
    less.truncate(256);
    Ok(Less { less })
}

fn is_sentinel_for(c: u8, alphabet: &Alphabet) -> bool {
    alphabet.symbols().next().is_some_and(|min| c < min)
}

/// Sampled occurrence table: `get(bwt, r, c)` is the number of `c` in `bwt[0..=r]`.
///
/// Counts are stored for every `k`-th row; a lookup adds a scan over fewer
/// than `k` BWT symbols to the nearest checkpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occ {
    sampling_rate: usize,
    // symbol -> column in `checkpoints`
    columns: Vec<Option<u8>>,
    sigma: usize,
    checkpoints: Vec<usize>,
}

impl Occ {
    pub fn new(bwt: &Bwt, sampling_rate: usize, alphabet: &Alphabet) -> Result<Self> {
        if sampling_rate == 0 {
            return Err(Error::InvalidParameter("sampling rate must be at least 1"));
        }
        let mut columns = vec![None; 256];
        let mut sigma = 0usize;
        let mut symbols: Vec<u8> = bwt
            .iter()
            .copied()
            .filter(|&c| !alphabet.contains(c))
            .collect();
        symbols.sort_unstable();
        symbols.dedup();
        if let Some(i) = bwt
            .iter()
            .position(|&c| !alphabet.contains(c) && !is_sentinel_for(c, alphabet))
        {
            return Err(Error::SymbolNotInAlphabet(i));
        }
        symbols.extend(alphabet.symbols());
        for c in symbols {
            if columns[c as usize].is_none() {
                columns[c as usize] = Some(sigma as u8);
                sigma += 1;
            }
        }

        let mut counts = vec![0usize; sigma];
        let mut checkpoints = Vec::with_capacity((bwt.len() / sampling_rate + 1) * sigma);
        for (i, &c) in bwt.iter().enumerate() {
            let col = columns[c as usize].expect("all symbols have a column") as usize;
            counts[col] += 1;
            if i % sampling_rate == 0 {
                checkpoints.extend_from_slice(&counts);
            }
        }
        Ok(Occ {
            sampling_rate,
            columns,
            sigma,
            checkpoints,
        })
    }

    pub fn sampling_rate(&self) -> usize {
        self.sampling_rate
    }

    /// Number of occurrences of `c` in `bwt[0..=r]`. Symbols absent from the
    /// table occur zero times.
    #[inline]
    pub fn get(&self, bwt: &[u8], r: usize, c: u8) -> usize {
        let Some(col) = self.columns[c as usize] else {
            return 0;
        };
        let block = r / self.sampling_rate;
        let base = self.checkpoints[block * self.sigma + col as usize];
        let from = block * self.sampling_rate + 1;
        base + bwt[from..=r].iter().filter(|&&b| b == c).count()
    }
}
