//! Independent reference implementations shared by the integration and
//! acceptance tests. Each one is written for obviousness, not speed, and shares
//! no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::rngs::StdRng;
use rand::Rng;

pub fn random_text(rng: &mut StdRng, alphabet: &[u8], len: usize) -> Vec<u8> {
    (0..len)
        .map(|_| alphabet[rng.random_range(0..alphabet.len())])
        .collect()
}

/// The first `size` lowercase letters.
pub fn letters(size: usize) -> Vec<u8> {
    (b'a'..).take(size).collect()
}

/// Start positions of all occurrences, by comparing every window.
pub fn naive_find(text: &[u8], pattern: &[u8]) -> Vec<usize> {
    if pattern.is_empty() || pattern.len() > text.len() {
        return Vec::new();
    }
    (0..=text.len() - pattern.len())
        .filter(|&i| &text[i..i + pattern.len()] == pattern)
        .collect()
}

/// Suffix array by sorting all suffixes with slice comparison.
pub fn naive_suffix_array(text: &[u8]) -> Vec<usize> {
    let mut sa: Vec<usize> = (0..text.len()).collect();
    sa.sort_by(|&a, &b| text[a..].cmp(&text[b..]));
    sa
}

/// BWT from the sorted rotations of `text`.
pub fn naive_bwt(text: &[u8]) -> Vec<u8> {
    let n = text.len();
    let mut rotations: Vec<Vec<u8>> = (0..n)
        .map(|i| text[i..].iter().chain(&text[..i]).copied().collect())
        .collect();
    rotations.sort();
    rotations.iter().map(|r| r[n - 1]).collect()
}

pub fn complement(c: u8) -> u8 {
    match c {
        b'A' => b'T',
        b'C' => b'G',
        b'G' => b'C',
        b'T' => b'A',
        other => other,
    }
}

pub fn reverse_complement(s: &[u8]) -> Vec<u8> {
    s.iter().rev().map(|&c| complement(c)).collect()
}

/// Supermaximal exact matches of `query` against `text` and its reverse
/// complement: every query interval `[i, j)` whose substring occurs in either
/// strand and is not contained in another such interval, mapped to the
/// number of occurrences on both strands.
pub fn brute_force_smems(text: &[u8], query: &[u8]) -> HashMap<(usize, usize), usize> {
    let rc = reverse_complement(text);
    let count = |s: &[u8]| naive_find(text, s).len() + naive_find(&rc, s).len();
    let m = query.len();
    let mut matches = Vec::new();
    for i in 0..m {
        for j in i + 1..=m {
            let c = count(&query[i..j]);
            if c > 0 {
                matches.push((i, j, c));
            }
        }
    }
    matches
        .iter()
        .filter(|&&(i, j, _)| {
            !matches
                .iter()
                .any(|&(a, b, _)| a <= i && j <= b && (a, b) != (i, j))
        })
        .map(|&(i, j, c)| ((i, j), c))
        .collect()
}

/// Plain Levenshtein distance.
pub fn edit_distance(a: &[u8], b: &[u8]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    for (i, &x) in a.iter().enumerate() {
        let mut cur = vec![i + 1; b.len() + 1];
        for (j, &y) in b.iter().enumerate() {
            cur[j + 1] = (prev[j] + usize::from(x != y))
                .min(prev[j + 1] + 1)
                .min(cur[j] + 1);
        }
        prev = cur;
    }
    prev[b.len()]
}

/// `(end, distance)` for every inclusive text end where the best substring
/// ending there is within distance `k`, by trying every start.
pub fn brute_force_approx(pattern: &[u8], text: &[u8], k: usize) -> Vec<(usize, usize)> {
    (0..text.len())
        .filter_map(|end| {
            let d = (0..=end + 1)
                .map(|start| edit_distance(pattern, &text[start..end + 1]))
                .min()
                .unwrap();
            (d <= k).then_some((end, d))
        })
        .collect()
}

/// The same hits as [`brute_force_approx`], from one semi-global matrix
/// (free start row), for inputs too large for the brute force.
pub fn semiglobal_dp_approx(pattern: &[u8], text: &[u8], k: usize) -> Vec<(usize, usize)> {
    let m = pattern.len();
    let mut col: Vec<usize> = (0..=m).collect();
    let mut hits = Vec::new();
    for (j, &t) in text.iter().enumerate() {
        let mut next = vec![0; m + 1];
        for i in 1..=m {
            next[i] = (col[i - 1] + usize::from(pattern[i - 1] != t))
                .min(col[i] + 1)
                .min(next[i - 1] + 1);
        }
        if next[m] <= k {
            hits.push((j, next[m]));
        }
        col = next;
    }
    hits
}

/// Simple affine scoring for the alignment oracles.
#[derive(Clone, Copy, Debug)]
pub struct AffineScores {
    pub gap_open: i32,
    pub gap_extend: i32,
    pub match_score: i32,
    pub mismatch_score: i32,
}

impl AffineScores {
    fn pair(&self, a: u8, b: u8) -> i32 {
        if a == b {
            self.match_score
        } else {
            self.mismatch_score
        }
    }

    fn gap(&self, len: usize) -> i32 {
        self.gap_open + len as i32 * self.gap_extend
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Global,
    Semiglobal,
    Local,
}

/// Every alignment of `x` and `y` as a column string over `M` (aligned pair),
/// `D` (x symbol against a gap) and `I` (y symbol against a gap).
pub fn enumerate_alignments(m: usize, n: usize) -> Vec<Vec<u8>> {
    if m == 0 && n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut extend = |op: u8, rest: Vec<Vec<u8>>| {
        for mut r in rest {
            r.insert(0, op);
            out.push(r);
        }
    };
    if m > 0 && n > 0 {
        extend(b'M', enumerate_alignments(m - 1, n - 1));
    }
    if m > 0 {
        extend(b'D', enumerate_alignments(m - 1, n));
    }
    if n > 0 {
        extend(b'I', enumerate_alignments(m, n - 1));
    }
    out
}

/// Score of one explicit column string; gap runs are maximal runs of equal letters.
pub fn score_columns(x: &[u8], y: &[u8], columns: &[u8], s: &AffineScores) -> i32 {
    let (mut i, mut j, mut score) = (0, 0, 0);
    for (k, &op) in columns.iter().enumerate() {
        match op {
            b'M' => {
                score += s.pair(x[i], y[j]);
                i += 1;
                j += 1;
            }
            _ => {
                if k == 0 || columns[k - 1] != op {
                    score += s.gap_open;
                }
                score += s.gap_extend;
                if op == b'D' {
                    i += 1;
                } else {
                    j += 1;
                }
            }
        }
    }
    score
}

/// Optimal score by listing every alignment explicitly (and, for the free-end
/// modes, every admissible pair of substrings). Exponential; tiny inputs only.
pub fn enumerated_score(x: &[u8], y: &[u8], s: &AffineScores, mode: OracleMode) -> i32 {
    let global = |a: &[u8], b: &[u8]| {
        enumerate_alignments(a.len(), b.len())
            .iter()
            .map(|cols| score_columns(a, b, cols, s))
            .max()
            .unwrap()
    };
    let substrings = |s: &[u8]| -> Vec<(usize, usize)> {
        (0..=s.len())
            .flat_map(|a| (a..=s.len()).map(move |b| (a, b)))
            .collect()
    };
    match mode {
        OracleMode::Global => global(x, y),
        OracleMode::Semiglobal => substrings(y)
            .into_iter()
            .map(|(a, b)| global(x, &y[a..b]))
            .max()
            .unwrap(),
        OracleMode::Local => {
            let mut best = 0;
            for &(a, b) in &substrings(x) {
                for &(c, d) in &substrings(y) {
                    best = best.max(global(&x[a..b], &y[c..d]));
                }
            }
            best
        }
    }
}

/// Optimal score by exhaustive search over alignments decomposed into
/// columns and whole gap runs, with memoisation on (position, previous run
/// kind). Polynomial, so usable on every pair up to length 7 and beyond.
pub fn run_search_score(x: &[u8], y: &[u8], s: &AffineScores, mode: OracleMode) -> i32 {
    // prev: 0 = start or aligned column, 1 = after a run of D, 2 = after a run of I
    struct Search<'a> {
        x: &'a [u8],
        y: &'a [u8],
        s: &'a AffineScores,
        mode: OracleMode,
        memo: Vec<Option<i32>>,
    }
    impl Search<'_> {
        fn best(&mut self, i: usize, j: usize, prev: usize) -> i32 {
            let (m, n) = (self.x.len(), self.y.len());
            let key = (i * (n + 1) + j) * 3 + prev;
            if let Some(v) = self.memo[key] {
                return v;
            }
            let mut best = match self.mode {
                OracleMode::Global if i == m && j == n => Some(0),
                OracleMode::Semiglobal if i == m => Some(0),
                OracleMode::Local => Some(0),
                _ => None,
            };
            let mut consider = |v: i32| best = Some(best.map_or(v, |b: i32| b.max(v)));
            if i < m && j < n {
                let v = self.s.pair(self.x[i], self.y[j]) + self.best(i + 1, j + 1, 0);
                consider(v);
            }
            if prev != 1 {
                for len in 1..=m - i {
                    let v = self.s.gap(len) + self.best(i + len, j, 1);
                    consider(v);
                }
            }
            if prev != 2 {
                for len in 1..=n - j {
                    let v = self.s.gap(len) + self.best(i, j + len, 2);
                    consider(v);
                }
            }
            let v = best.unwrap_or(i32::MIN / 4);
            self.memo[key] = Some(v);
            v
        }
    }
    let mut search = Search {
        x,
        y,
        s,
        mode,
        memo: vec![None; (x.len() + 1) * (y.len() + 1) * 3],
    };
    match mode {
        OracleMode::Global => search.best(0, 0, 0),
        OracleMode::Semiglobal => (0..=y.len()).map(|c| search.best(0, c, 0)).max().unwrap(),
        OracleMode::Local => {
            let mut best = 0;
            for a in 0..=x.len() {
                for c in 0..=y.len() {
                    best = best.max(search.best(a, c, 0));
                }
            }
            best
        }
    }
}

/// All strings over `alphabet` of length `0..=max_len`.
pub fn all_strings(alphabet: &[u8], max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for &c in alphabet {
                let mut t: Vec<u8> = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn rank1_scan(bits: &[bool], i: usize) -> usize {
    bits[..=i].iter().filter(|&&b| b).count()
}

/// Positions holding `value`, in order; `select(j)` is element `j - 1`.
pub fn positions_of(bits: &[bool], value: bool) -> Vec<usize> {
    bits.iter()
        .enumerate()
        .filter(|&(_, &b)| b == value)
        .map(|(i, _)| i)
        .collect()
}

pub fn as_set<T: Ord + Clone>(items: &[T]) -> BTreeSet<T> {
    items.iter().cloned().collect()
}
