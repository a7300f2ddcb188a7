//! Alphabets over bytes.
//!
//! An [`Alphabet`] is a set of byte symbols with constant-time membership, so
//! checking whether a text is a word over it takes O(n). A [`RankTransform`]
//! maps symbols onto dense lexicographical ranks (ordered by byte value) and
//! packs q-grams of ranks into a single `u64`.
//!
//! ```
//! use seqlib::alphabets::{dna, RankTransform};
//!
//! let alphabet = dna::alphabet();
//! assert!(alphabet.is_word(b"ACGTacgt"));
//! assert!(!alphabet.is_word(b"ACGU"));
//!
//! let ranks = RankTransform::new(&seqlib::alphabets::Alphabet::new(b"ACGT").unwrap());
//! let codes: Vec<u64> = ranks.qgrams(b"ACGT", 2).unwrap().collect();
//! assert_eq!(codes, [1, 6, 11]);
//! ```

use std::fmt;

use crate::error::{Error, Result};

/// A finite set of byte symbols.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    members: [u64; 4],
}

impl Alphabet {
    /// Build an alphabet from the distinct bytes in `symbols`.
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet);
        }
        let mut alphabet = Alphabet { members: [0; 4] };
        for &s in symbols {
            alphabet.insert(s);
        }
        Ok(alphabet)
    }

    pub fn insert(&mut self, symbol: u8) {
        self.members[(symbol >> 6) as usize] |= 1 << (symbol & 63);
    }

    #[inline]
    pub fn contains(&self, symbol: u8) -> bool {
        self.members[(symbol >> 6) as usize] & (1 << (symbol & 63)) != 0
    }

    /// Whether every symbol of `text` belongs to the alphabet. O(|text|).
    pub fn is_word(&self, text: &[u8]) -> bool {
        text.iter().all(|&c| self.contains(c))
    }

    /// Position of the first symbol of `text` outside the alphabet, if any.
    pub fn first_foreign(&self, text: &[u8]) -> Option<usize> {
        text.iter().position(|&c| !self.contains(c))
    }

    pub fn len(&self) -> usize {
        self.members.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Always false; alphabets cannot be empty.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn max_symbol(&self) -> u8 {
        self.symbols().last().expect("alphabets are non-empty")
    }

    /// Symbols in ascending byte order.
    pub fn symbols(&self) -> impl DoubleEndedIterator<Item = u8> + '_ {
        (0..=255u8).filter(move |&c| self.contains(c))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbols: Vec<u8> = self.symbols().collect();
        f.debug_struct("Alphabet")
            .field("symbols", &String::from_utf8_lossy(&symbols))
            .finish()
    }
}

/// Maps the symbols of an alphabet to ranks `0..len` in byte order.
#[derive(Clone, Debug)]
pub struct RankTransform {
    ranks: [Option<u8>; 256],
    symbols: Vec<u8>,
    bits: u32,
}

impl RankTransform {
    pub fn new(alphabet: &Alphabet) -> Self {
        let mut ranks = [None; 256];
        let symbols: Vec<u8> = alphabet.symbols().collect();
        for (r, &c) in symbols.iter().enumerate() {
            ranks[c as usize] = Some(r as u8);
        }
        let bits = bits_for(symbols.len());
        RankTransform {
            ranks,
            symbols,
            bits,
        }
    }

    #[inline]
    pub fn get(&self, symbol: u8) -> Option<u8> {
        self.ranks[symbol as usize]
    }

    /// The symbol with the given rank.
    pub fn symbol(&self, rank: u8) -> Option<u8> {
        self.symbols.get(rank as usize).copied()
    }

    /// Number of symbols in the underlying alphabet.
    pub fn alphabet_size(&self) -> usize {
        self.symbols.len()
    }

    /// `ceil(log2(|alphabet|))`, at least 1.
    pub fn bits_per_symbol(&self) -> u32 {
        self.bits
    }

    pub fn transform(&self, text: &[u8]) -> Result<Vec<u8>> {
        text.iter()
            .enumerate()
            .map(|(i, &c)| self.get(c).ok_or(Error::SymbolNotInAlphabet(i)))
            .collect()
    }

    pub fn inverse(&self, ranks: &[u8]) -> Option<Vec<u8>> {
        ranks.iter().map(|&r| self.symbol(r)).collect()
    }

    /// Iterate over the bit-packed ranks of all q-grams of `text`, leftmost
    /// symbol in the most significant position.
    pub fn qgrams<'a>(&'a self, text: &'a [u8], q: usize) -> Result<QGrams<'a>> {
        check_q(q, self.bits)?;
        if let Some(i) = text.iter().position(|&c| self.get(c).is_none()) {
            return Err(Error::SymbolNotInAlphabet(i));
        }
        let total_bits = q as u32 * self.bits;
        let mask = if total_bits == 64 {
            u64::MAX
        } else {
            (1u64 << total_bits) - 1
        };
        let mut qgrams = QGrams {
            transform: self,
            text,
            q,
            pos: 0,
            code: 0,
            mask,
        };
        if text.len() >= q {
            for &c in &text[..q - 1] {
                qgrams.push(c);
            }
            qgrams.pos = q - 1;
        } else {
            qgrams.pos = text.len();
        }
        Ok(qgrams)
    }

    /// Encode a single q-gram (`q = qgram.len()`).
    pub fn encode(&self, qgram: &[u8]) -> Result<u64> {
        check_q(qgram.len(), self.bits)?;
        let mut code = 0u64;
        for (i, &c) in qgram.iter().enumerate() {
            let r = self.get(c).ok_or(Error::SymbolNotInAlphabet(i))?;
            code = (code << self.bits) | r as u64;
        }
        Ok(code)
    }
}

pub(crate) fn check_q(q: usize, bits: u32) -> Result<()> {
    if q == 0 {
        return Err(Error::InvalidParameter("q must be at least 1"));
    }
    if q.saturating_mul(bits as usize) > 64 {
        return Err(Error::QTooLarge { q, bits });
    }
    Ok(())
}

fn bits_for(size: usize) -> u32 {
    // ceil(log2(size)), with a floor of one bit
    let bits = usize::BITS - (size.max(2) - 1).leading_zeros();
    bits.max(1)
}

/// Iterator over bit-encoded q-grams, see [`RankTransform::qgrams`].
#[derive(Clone, Debug)]
pub struct QGrams<'a> {
    transform: &'a RankTransform,
    text: &'a [u8],
    q: usize,
    pos: usize,
    code: u64,
    mask: u64,
}

impl QGrams<'_> {
    #[inline]
    fn push(&mut self, c: u8) {
        let r = self.transform.ranks[c as usize].expect("validated on construction");
        // `checked_shl` keeps a 64-bit single-symbol code (q = 1, 64 bits) well defined
        let shifted = self.code.checked_shl(self.transform.bits).unwrap_or(0);
        self.code = (shifted | r as u64) & self.mask;
    }
}

impl Iterator for QGrams<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let c = *self.text.get(self.pos)?;
        self.push(c);
        self.pos += 1;
        Some(self.code)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.text.len() - self.pos;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for QGrams<'_> {}

impl QGrams<'_> {
    pub fn q(&self) -> usize {
        self.q
    }
}

/// Nucleotide alphabets and reverse complementation.
pub mod dna {
    use super::Alphabet;
    use crate::error::{Error, Result};

    const IUPAC: &[u8] = b"ACGTRYSWKMBDHVN";

    /// `{A, C, G, T}` in upper and lower case.
    pub fn alphabet() -> Alphabet {
        Alphabet::new(b"ACGTacgt").unwrap()
    }

    /// `{A, C, G, T, N}` in upper and lower case.
    pub fn n_alphabet() -> Alphabet {
        Alphabet::new(b"ACGTNacgtn").unwrap()
    }

    /// The 15 IUPAC nucleotide codes in upper and lower case, plus the gap `-`.
    pub fn iupac_alphabet() -> Alphabet {
        let mut a = Alphabet::new(IUPAC).unwrap();
        for &c in IUPAC {
            a.insert(c.to_ascii_lowercase());
        }
        a.insert(b'-');
        a
    }

    const fn complement_table() -> [u8; 256] {
        let pairs: &[(u8, u8)] = &[
            (b'A', b'T'),
            (b'C', b'G'),
            (b'R', b'Y'),
            (b'K', b'M'),
            (b'B', b'V'),
            (b'D', b'H'),
            (b'S', b'S'),
            (b'W', b'W'),
            (b'N', b'N'),
        ];
        let mut table = [0u8; 256];
        let mut i = 0;
        while i < pairs.len() {
            let (a, b) = pairs[i];
            table[a as usize] = b;
            table[b as usize] = a;
            table[(a + 32) as usize] = b + 32;
            table[(b + 32) as usize] = a + 32;
            i += 1;
        }
        table[b'-' as usize] = b'-';
        table
    }

    static COMPLEMENT: [u8; 256] = complement_table();

    /// Complement of an IUPAC nucleotide code, preserving case.
    #[inline]
    pub fn complement(symbol: u8) -> Option<u8> {
        match COMPLEMENT[symbol as usize] {
            0 => None,
            c => Some(c),
        }
    }

    /// Reverse complement of an IUPAC text.
    pub fn revcomp(text: &[u8]) -> Result<Vec<u8>> {
        let n = text.len();
        text.iter()
            .rev()
            .enumerate()
            .map(|(i, &c)| complement(c).ok_or(Error::SymbolNotInAlphabet(n - 1 - i)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn acgt() -> RankTransform {
        RankTransform::new(&Alphabet::new(b"ACGT").unwrap())
    }

    #[test]
    fn construction() {
        assert_eq!(Alphabet::new(b"ACGT").unwrap().len(), 4);
        assert_eq!(Alphabet::new(b"AACC").unwrap().len(), 2);
        assert!(matches!(Alphabet::new(b""), Err(Error::InvalidAlphabet)));
        assert_eq!(Alphabet::new(b"CA").unwrap().max_symbol(), b'C');
    }

    #[test]
    fn ready_made_alphabets() {
        assert_eq!(dna::alphabet().len(), 8);
        let iupac = dna::iupac_alphabet();
        assert!(iupac.contains(b'N') && iupac.contains(b'n'));
        assert_eq!(iupac.len(), 31);
        assert!(!dna::alphabet().contains(b'U'));
    }

    #[test]
    fn words() {
        let dna = dna::alphabet();
        assert!(dna.is_word(b"ACGT"));
        assert!(!dna.is_word(b"ACGU"));
        assert!(dna.is_word(b""));
        assert_eq!(dna.first_foreign(b"ACGU"), Some(3));
    }

    #[test]
    fn ranks() {
        let t = acgt();
        assert_eq!(t.transform(b"ACGT").unwrap(), [0, 1, 2, 3]);
        assert_eq!(t.transform(b"TGCA").unwrap(), [3, 2, 1, 0]);
        assert!(matches!(
            t.transform(b"ACGU"),
            Err(Error::SymbolNotInAlphabet(3))
        ));
        // case-sensitive alphabets rank by byte value
        let mixed = RankTransform::new(&Alphabet::new(b"aA").unwrap());
        assert_eq!(mixed.get(b'A'), Some(0));
        assert_eq!(mixed.get(b'a'), Some(1));
    }

    #[test]
    fn bit_widths() {
        let width = |s: &[u8]| RankTransform::new(&Alphabet::new(s).unwrap()).bits_per_symbol();
        assert_eq!(width(b"A"), 1);
        assert_eq!(width(b"AC"), 1);
        assert_eq!(width(b"ACG"), 2);
        assert_eq!(width(b"ACGT"), 2);
        assert_eq!(width(b"ACGTN"), 3);
        let all: Vec<u8> = (0..=255).collect();
        assert_eq!(width(&all), 8);
    }

    #[test]
    fn qgram_codes() {
        let t = acgt();
        // rank(s1) * 4 + rank(s2)
        let expected: Vec<u64> = [(0, 1), (1, 2), (2, 3)]
            .iter()
            .map(|&(a, b)| a * 4 + b)
            .collect();
        assert_eq!(t.qgrams(b"ACGT", 2).unwrap().collect::<Vec<_>>(), expected);
        assert_eq!(t.qgrams(b"AC", 3).unwrap().count(), 0);
        assert_eq!(t.qgrams(b"AC", 1).unwrap().collect::<Vec<_>>(), [0, 1]);
        assert!(matches!(
            t.qgrams(b"ACGT", 33),
            Err(Error::QTooLarge { .. })
        ));
        assert!(t.qgrams(b"ACGT", 32).is_ok());
        assert_eq!(t.encode(b"GT").unwrap(), 11);
    }

    #[test]
    fn qgram_full_word() {
        // 8 bits per symbol and q = 8 uses all 64 bits
        let all: Vec<u8> = (0..=255).collect();
        let t = RankTransform::new(&Alphabet::new(&all).unwrap());
        let text = b"\xff\xff\xff\xff\xff\xff\xff\xff\x01";
        let codes: Vec<u64> = t.qgrams(text, 8).unwrap().collect();
        assert_eq!(codes, [u64::MAX, u64::MAX << 8 | 1]);
    }

    #[test]
    fn revcomp_examples() {
        assert_eq!(dna::revcomp(b"ACGT").unwrap(), b"ACGT");
        assert_eq!(dna::revcomp(b"AAC").unwrap(), b"GTT");
        assert_eq!(dna::revcomp(b"aRn-").unwrap(), b"-nYt");
        assert!(matches!(
            dna::revcomp(b"ACXA"),
            Err(Error::SymbolNotInAlphabet(2))
        ));
    }

    proptest! {
        #[test]
        fn membership_flip(text in proptest::collection::vec(prop::sample::select(b"ACGTacgt".to_vec()), 1..200), idx in any::<prop::sample::Index>()) {
            let dna = dna::alphabet();
            prop_assert!(dna.is_word(&text));
            let mut bad = text.clone();
            bad[idx.index(text.len())] = b'U';
            prop_assert!(!dna.is_word(&bad));
        }

        #[test]
        fn rank_roundtrip(text in proptest::collection::vec(prop::sample::select(b"ACGTN".to_vec()), 0..200)) {
            let t = RankTransform::new(&Alphabet::new(b"ACGTN").unwrap());
            let ranks = t.transform(&text).unwrap();
            prop_assert_eq!(t.inverse(&ranks).unwrap(), text);
        }

        #[test]
        fn qgram_bounds(text in proptest::collection::vec(prop::sample::select(b"ACGT".to_vec()), 0..100), q in 1usize..12) {
            let t = acgt();
            let codes: Vec<u64> = t.qgrams(&text, q).unwrap().collect();
            prop_assert_eq!(codes.len(), text.len().saturating_sub(q - 1));
            for (i, &code) in codes.iter().enumerate() {
                prop_assert!(code < 4u64.pow(q as u32));
                prop_assert_eq!(code, t.encode(&text[i..i + q]).unwrap());
            }
        }

        #[test]
        fn revcomp_involution(text in proptest::collection::vec(prop::sample::select(b"ACGTRYSWKMBDHVNacgtrysw-".to_vec()), 0..200)) {
            prop_assert_eq!(dna::revcomp(&dna::revcomp(&text).unwrap()).unwrap(), text);
        }
    }
}
