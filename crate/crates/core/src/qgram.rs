//! Position index of all q-grams of a text.
//!
//! q-grams are bit-encoded with [`RankTransform::qgrams`], so `q` is bounded
//! by `q * bits_per_symbol <= 64` (q ≤ 32 for DNA). The index is a dense
//! bucket table over the code space plus one array of positions, built by
//! counting sort in O(n + 2^(q·bits)) time and space.
//!
//! ```
//! use seqlib::alphabets::{Alphabet, RankTransform};
//! use seqlib::qgram::QGramIndex;
//!
//! let transform = RankTransform::new(&Alphabet::new(b"ACGT").unwrap());
//! let index = QGramIndex::new(b"ACGTACGT", 3, &transform).unwrap();
//! assert_eq!(index.matches(b"ACG").unwrap(), &[0, 4]);
//! ```

use crate::alphabets::{check_q, RankTransform};
use crate::error::{Error, Result};

/// Default cap on the number of buckets (2^28 offsets, 2 GiB on 64-bit targets).
pub const DEFAULT_MAX_BUCKETS: usize = 1 << 28;

#[derive(Clone, Debug)]
pub struct QGramIndex {
    q: usize,
    transform: RankTransform,
    // offsets into `positions`, one per code plus a final total
    buckets: Vec<usize>,
    positions: Vec<usize>,
}

impl QGramIndex {
    pub fn new(text: &[u8], q: usize, transform: &RankTransform) -> Result<Self> {
        Self::with_max_buckets(text, q, transform, DEFAULT_MAX_BUCKETS)
    }

    pub fn with_max_buckets(
        text: &[u8],
        q: usize,
        transform: &RankTransform,
        max_buckets: usize,
    ) -> Result<Self> {
        check_q(q, transform.bits_per_symbol())?;
        let codes = 1u128 << (q as u32 * transform.bits_per_symbol());
        if codes >= max_buckets as u128 {
            return Err(Error::BucketTableTooLarge {
                buckets: codes + 1,
                cap: max_buckets,
            });
        }
        let codes = codes as usize;

        let mut buckets = vec![0usize; codes + 1];
        for code in transform.qgrams(text, q)? {
            buckets[code as usize + 1] += 1;
        }
        for i in 1..buckets.len() {
            buckets[i] += buckets[i - 1];
        }
        let mut fill = buckets.clone();
        let mut positions = vec![0; *buckets.last().unwrap()];
        for (i, code) in transform.qgrams(text, q)?.enumerate() {
            let slot = &mut fill[code as usize];
            positions[*slot] = i;
            *slot += 1;
        }
        Ok(QGramIndex {
            q,
            transform: transform.clone(),
            buckets,
            positions,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Total number of indexed q-grams, `max(0, n - q + 1)`.
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Ascending start positions of `qgram`.
    pub fn matches(&self, qgram: &[u8]) -> Result<&[usize]> {
        if qgram.len() != self.q {
            return Err(Error::LengthMismatch {
                expected: self.q,
                found: qgram.len(),
            });
        }
        let code = self.transform.encode(qgram)? as usize;
        Ok(self.code_matches(code))
    }

    /// Positions of an already encoded q-gram.
    pub fn code_matches(&self, code: usize) -> &[usize] {
        match (self.buckets.get(code), self.buckets.get(code + 1)) {
            (Some(&from), Some(&to)) => &self.positions[from..to],
            _ => &[],
        }
    }

    pub fn buckets(&self) -> &[usize] {
        &self.buckets
    }
}
