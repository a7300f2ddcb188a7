//! Approximate pattern matching under edit distance.
//!
//! All searchers use the semi-global convention: the pattern must be aligned
//! completely, against any substring of the text. They report `(end, distance)`
//! pairs, where `end` is the inclusive text index of the last matched symbol and
//! `distance` the minimum edit distance of the pattern to a substring ending
//! there, for every `end` where that distance is at most `k`.
//!
//! * [`Ukkonen`]: column-wise dynamic programming that only computes cells up to
//!   the last row whose value can still be ≤ k; expected O(kn).
//! * [`Myers`]: bit-parallel simulation of the same matrix, O(n) for patterns
//!   of up to 64 symbols.
//! * [`DpOracle`]: the full (m+1)×(n+1) matrix, used as a reference.
//!
//! ```
//! use seqlib::approx::{Myers, Ukkonen};
//!
//! let myers = Myers::new(b"ACG").unwrap();
//! let hits: Vec<(usize, usize)> = myers.find_all(b"ACCG", 1).collect();
//! assert_eq!(hits, Ukkonen::new(b"ACG").find_all(b"ACCG", 1).collect::<Vec<_>>());
//! ```

pub mod myers;
pub mod ukkonen;

pub use myers::Myers;
pub use ukkonen::Ukkonen;

/// The full semi-global edit distance matrix of a pattern against a text.
#[derive(Clone, Debug)]
pub struct DpOracle {
    rows: usize,
    cols: usize,
    // row-major (m+1) × (n+1)
    cells: Vec<usize>,
}

impl DpOracle {
    pub fn new(pattern: &[u8], text: &[u8]) -> Self {
        let (rows, cols) = (pattern.len() + 1, text.len() + 1);
        let mut cells = vec![0; rows * cols];
        for i in 1..rows {
            cells[i * cols] = i;
            for j in 1..cols {
                let diag =
                    cells[(i - 1) * cols + j - 1] + usize::from(pattern[i - 1] != text[j - 1]);
                let up = cells[(i - 1) * cols + j] + 1;
                let left = cells[i * cols + j - 1] + 1;
                cells[i * cols + j] = diag.min(up).min(left);
            }
        }
        DpOracle { rows, cols, cells }
    }

    /// `D[i][j]`: distance of `pattern[..i]` to the best substring ending before text index `j`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.cols + j]
    }

    /// All `(end, distance)` with distance ≤ k.
    pub fn hits(&self, k: usize) -> Vec<(usize, usize)> {
        let m = self.rows - 1;
        (1..self.cols)
            .map(|j| (j - 1, self.get(m, j)))
            .filter(|&(_, d)| d <= k)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn oracle_small() {
        let dp = DpOracle::new(b"ACG", b"ACCG");
        // bottom row by hand: A C C G against ACG
        let bottom: Vec<usize> = (0..=4).map(|j| dp.get(3, j)).collect();
        assert_eq!(bottom, [3, 2, 1, 1, 1]);
        assert_eq!(dp.hits(1), [(1, 1), (2, 1), (3, 1)]);
        assert_eq!(dp.hits(0), []);
    }

    #[test]
    fn neighbouring_cells_differ_by_at_most_one() {
        let dp = DpOracle::new(b"GATTACA", b"TAGACCATTAGA");
        for i in 0..=7 {
            for j in 0..=12 {
                if i > 0 {
                    assert!(dp.get(i, j).abs_diff(dp.get(i - 1, j)) <= 1);
                }
                if j > 0 {
                    assert!(dp.get(i, j).abs_diff(dp.get(i, j - 1)) <= 1);
                }
            }
        }
    }

    #[test]
    fn spec_instance() {
        let expected = DpOracle::new(b"ACG", b"ACCG").hits(1);
        assert_eq!(ukkonen::ukkonen_find(b"ACG", b"ACCG", 1), expected);
        assert_eq!(myers::myers_find(b"ACG", b"ACCG", 1).unwrap(), expected);
    }

    #[test]
    fn exact_and_degenerate() {
        let text = b"GATTACAGATTACA";
        assert_eq!(ukkonen::ukkonen_find(b"TTAC", text, 0), [(5, 0), (12, 0)]);
        assert_eq!(
            myers::myers_find(b"TTAC", text, 0).unwrap(),
            [(5, 0), (12, 0)]
        );
        assert_eq!(myers::myers_find(text, text, 0).unwrap(), [(13, 0)]);
        // k >= m: every end position qualifies
        let all = ukkonen::ukkonen_find(b"CCC", text, 3);
        assert_eq!(all.len(), text.len());
        assert_eq!(myers::myers_find(b"CCC", text, 3).unwrap(), all);
        // the empty pattern matches everywhere with distance 0
        assert_eq!(ukkonen::ukkonen_find(b"", b"AC", 0), [(0, 0), (1, 0)]);
        assert_eq!(myers::myers_find(b"", b"AC", 0).unwrap(), [(0, 0), (1, 0)]);
        assert!(matches!(
            myers::Myers::new(&[b'A'; 65]),
            Err(crate::error::Error::PatternTooLong { len: 65, max: 64 })
        ));
    }

    #[test]
    fn full_word_pattern() {
        let p: Vec<u8> = (0..64).map(|i| b"ACGT"[(i * 5 + i / 4) % 4]).collect();
        let mut t = b"TTT".to_vec();
        t.extend_from_slice(&p[..30]);
        t.push(b'G');
        t.extend_from_slice(&p[30..]);
        for k in 0..4 {
            let expected = DpOracle::new(&p, &t).hits(k);
            assert_eq!(myers::myers_find(&p, &t, k).unwrap(), expected);
            assert_eq!(ukkonen::ukkonen_find(&p, &t, k), expected);
        }
    }

    proptest! {
        #[test]
        fn all_three_agree(
            p in proptest::collection::vec(prop::sample::select(b"ACGT".to_vec()), 0..33),
            t in proptest::collection::vec(prop::sample::select(b"ACGT".to_vec()), 0..200),
            k in 0usize..5,
        ) {
            let expected = DpOracle::new(&p, &t).hits(k);
            prop_assert_eq!(ukkonen::ukkonen_find(&p, &t, k), expected.clone());
            prop_assert_eq!(myers::myers_find(&p, &t, k).unwrap(), expected);
        }

        #[test]
        fn myers_tracks_the_bottom_row(
            p in proptest::collection::vec(prop::sample::select(b"ab".to_vec()), 1..20),
            t in proptest::collection::vec(prop::sample::select(b"ab".to_vec()), 0..100),
        ) {
            let dp = DpOracle::new(&p, &t);
            let myers = myers::Myers::new(&p).unwrap();
            // with k = m every position is reported, exposing the full bottom row
            let scores: Vec<(usize, usize)> = myers.find_all(&t, p.len()).collect();
            prop_assert_eq!(scores.len(), t.len());
            let mut it = myers.find_all(&t, p.len());
            for (j, &score) in scores.iter().enumerate() {
                prop_assert_eq!(score, (j, dp.get(p.len(), j + 1)));
                it.next();
                let (pv, mv) = it.deltas();
                prop_assert_eq!(pv & mv, 0);
            }
        }

        #[test]
        fn larger_k_keeps_hits(
            p in proptest::collection::vec(prop::sample::select(b"ACGT".to_vec()), 1..16),
            t in proptest::collection::vec(prop::sample::select(b"ACGT".to_vec()), 0..100),
            k in 0usize..4,
        ) {
            let small: Vec<usize> = ukkonen::ukkonen_find(&p, &t, k).into_iter().map(|h| h.0).collect();
            let large: Vec<usize> = ukkonen::ukkonen_find(&p, &t, k + 1).into_iter().map(|h| h.0).collect();
            prop_assert!(small.iter().all(|e| large.contains(e)));
        }
    }
}
