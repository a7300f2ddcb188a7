//! Pairwise alignment with affine gap penalties (Gotoh's three-matrix form of
//! Needleman-Wunsch and Smith-Waterman).
//!
//! A gap of length `l` scores `gap_open + l * gap_extend`; set `gap_open = 0`
//! for linear gaps. Modes:
//!
//! * [`AlignmentMode::Global`]: both sequences aligned end to end.
//! * [`AlignmentMode::Semiglobal`]: `x` aligned end to end, flanks of `y` free.
//! * [`AlignmentMode::Local`]: best-scoring pair of substrings; the empty
//!   alignment scores 0.
//!
//! Time and space are O(|x| |y|).
//!
//! Traceback is deterministic: an alignment start is taken as soon as one is
//! allowed, otherwise Match/Subst is preferred over Del, and Del over Ins.
//!
//! ```
//! use seqlib::align::{align, AlignmentMode, Scoring};
//!
//! let scoring = Scoring::from_scores(-1, -1, 1, -1).unwrap();
//! let aln = align(b"ACGT", b"TTTTACGTTTTT", &scoring, AlignmentMode::Local);
//! assert_eq!(aln.score, 4);
//! assert_eq!((aln.y_start, aln.y_end), (4, 8));
//! ```

use crate::error::{Error, Result};

/// Scores a pair of aligned symbols.
pub trait MatchFunc {
    fn score(&self, a: u8, b: u8) -> i32;
}

impl<F: Fn(u8, u8) -> i32> MatchFunc for F {
    fn score(&self, a: u8, b: u8) -> i32 {
        self(a, b)
    }
}

/// Fixed scores for identical and differing symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchParams {
    pub match_score: i32,
    pub mismatch_score: i32,
}

impl MatchFunc for MatchParams {
    #[inline]
    fn score(&self, a: u8, b: u8) -> i32 {
        if a == b {
            self.match_score
        } else {
            self.mismatch_score
        }
    }
}

#[derive(Clone, Debug)]
pub struct Scoring<F: MatchFunc> {
    pub gap_open: i32,
    pub gap_extend: i32,
    pub match_fn: F,
}

impl<F: MatchFunc> Scoring<F> {
    /// Gap penalties must be non-positive.
    pub fn new(gap_open: i32, gap_extend: i32, match_fn: F) -> Result<Self> {
        if gap_open > 0 || gap_extend > 0 {
            return Err(Error::InvalidParameter("gap penalties must be <= 0"));
        }
        Ok(Scoring {
            gap_open,
            gap_extend,
            match_fn,
        })
    }

    /// Score of a gap of length `len`.
    pub fn gap(&self, len: usize) -> i32 {
        if len == 0 {
            0
        } else {
            self.gap_open + len as i32 * self.gap_extend
        }
    }
}

impl Scoring<MatchParams> {
    pub fn from_scores(
        gap_open: i32,
        gap_extend: i32,
        match_score: i32,
        mismatch_score: i32,
    ) -> Result<Self> {
        Scoring::new(
            gap_open,
            gap_extend,
            MatchParams {
                match_score,
                mismatch_score,
            },
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlignmentMode {
    Global,
    Semiglobal,
    Local,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlignmentOperation {
    Match,
    Subst,
    /// Consumes a symbol of `x` only (gap in `y`).
    Del,
    /// Consumes a symbol of `y` only (gap in `x`).
    Ins,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlignmentResult {
    pub score: i32,
    pub x_start: usize,
    pub x_end: usize,
    pub y_start: usize,
    pub y_end: usize,
    pub ops: Vec<AlignmentOperation>,
    pub mode: AlignmentMode,
}

impl AlignmentResult {
    /// Score obtained by replaying `ops` over the aligned spans.
    pub fn rescore<F: MatchFunc>(&self, x: &[u8], y: &[u8], scoring: &Scoring<F>) -> Result<i32> {
        use AlignmentOperation::*;
        let (mut i, mut j) = (self.x_start, self.y_start);
        let mut score = 0;
        let mut prev = None;
        for &op in &self.ops {
            match op {
                Match | Subst => {
                    let (a, b) = (
                        *x.get(i).ok_or(Error::IndexTextMismatch)?,
                        *y.get(j).ok_or(Error::IndexTextMismatch)?,
                    );
                    if (a == b) != (op == Match) {
                        return Err(Error::IndexTextMismatch);
                    }
                    score += scoring.match_fn.score(a, b);
                    i += 1;
                    j += 1;
                }
                Del | Ins => {
                    if prev != Some(op) {
                        score += scoring.gap_open;
                    }
                    score += scoring.gap_extend;
                    if op == Del {
                        i += 1;
                    } else {
                        j += 1;
                    }
                }
            }
            prev = Some(op);
        }
        if i != self.x_end || j != self.y_end || i > x.len() || j > y.len() {
            return Err(Error::IndexTextMismatch);
        }
        Ok(score)
    }

    /// Swap the roles of `x` and `y`.
    pub fn swapped(&self) -> Self {
        use AlignmentOperation::*;
        AlignmentResult {
            score: self.score,
            x_start: self.y_start,
            x_end: self.y_end,
            y_start: self.x_start,
            y_end: self.x_end,
            ops: self
                .ops
                .iter()
                .map(|&op| match op {
                    Del => Ins,
                    Ins => Del,
                    other => other,
                })
                .collect(),
            mode: self.mode,
        }
    }
}

const NEG_INF: i32 = i32::MIN / 4;

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Best,
    Diag,
    Del,
    Ins,
}

/// Reusable aligner; keeps its DP matrices between calls.
#[derive(Clone, Debug)]
pub struct Aligner<F: MatchFunc> {
    scoring: Scoring<F>,
    cols: usize,
    diag: Vec<i32>,
    del: Vec<i32>,
    ins: Vec<i32>,
    best: Vec<i32>,
}

impl<F: MatchFunc> Aligner<F> {
    pub fn new(scoring: Scoring<F>) -> Self {
        Aligner {
            scoring,
            cols: 0,
            diag: Vec::new(),
            del: Vec::new(),
            ins: Vec::new(),
            best: Vec::new(),
        }
    }

    pub fn scoring(&self) -> &Scoring<F> {
        &self.scoring
    }

    pub fn global(&mut self, x: &[u8], y: &[u8]) -> AlignmentResult {
        self.align(x, y, AlignmentMode::Global)
    }

    pub fn semiglobal(&mut self, x: &[u8], y: &[u8]) -> AlignmentResult {
        self.align(x, y, AlignmentMode::Semiglobal)
    }

    pub fn local(&mut self, x: &[u8], y: &[u8]) -> AlignmentResult {
        self.align(x, y, AlignmentMode::Local)
    }

    fn may_start(mode: AlignmentMode, i: usize, j: usize) -> bool {
        match mode {
            AlignmentMode::Global => i == 0 && j == 0,
            AlignmentMode::Semiglobal => i == 0,
            AlignmentMode::Local => true,
        }
    }

    pub fn align(&mut self, x: &[u8], y: &[u8], mode: AlignmentMode) -> AlignmentResult {
        let (m, n) = (x.len(), y.len());
        let cols = n + 1;
        let cells = (m + 1) * cols;
        self.cols = cols;
        for v in [&mut self.diag, &mut self.del, &mut self.ins, &mut self.best] {
            v.clear();
            v.resize(cells, NEG_INF);
        }
        let open = self.scoring.gap_open + self.scoring.gap_extend;
        let extend = self.scoring.gap_extend;

        for i in 0..=m {
            for j in 0..=n {
                let at = i * cols + j;
                if i > 0 && j > 0 {
                    let s = self.scoring.match_fn.score(x[i - 1], y[j - 1]);
                    self.diag[at] = add(self.best[at - cols - 1], s);
                }
                if i > 0 {
                    self.del[at] =
                        add(self.best[at - cols], open).max(add(self.del[at - cols], extend));
                }
                if j > 0 {
                    self.ins[at] = add(self.best[at - 1], open).max(add(self.ins[at - 1], extend));
                }
                let mut best = self.diag[at].max(self.del[at]).max(self.ins[at]);
                if Self::may_start(mode, i, j) {
                    best = best.max(0);
                }
                self.best[at] = best;
            }
        }

        let (end_i, end_j) = match mode {
            AlignmentMode::Global => (m, n),
            AlignmentMode::Semiglobal => {
                let row = &self.best[m * cols..];
                let j = (0..=n).fold(0, |b, j| if row[j] > row[b] { j } else { b });
                (m, j)
            }
            AlignmentMode::Local => {
                let at = (0..cells).fold(0, |b, a| if self.best[a] > self.best[b] { a } else { b });
                (at / cols, at % cols)
            }
        };
        self.traceback(x, y, mode, end_i, end_j)
    }

    fn traceback(
        &self,
        x: &[u8],
        y: &[u8],
        mode: AlignmentMode,
        end_i: usize,
        end_j: usize,
    ) -> AlignmentResult {
        let cols = self.cols;
        let extend = self.scoring.gap_extend;
        let score = self.best[end_i * cols + end_j];
        let (mut i, mut j) = (end_i, end_j);
        let mut state = State::Best;
        let mut ops = Vec::with_capacity(end_i + end_j);
        loop {
            let at = i * cols + j;
            match state {
                State::Best => {
                    let best = self.best[at];
                    if Self::may_start(mode, i, j) && best == 0 {
                        break;
                    }
                    state = if i > 0 && j > 0 && self.diag[at] == best {
                        State::Diag
                    } else if i > 0 && self.del[at] == best {
                        State::Del
                    } else {
                        State::Ins
                    };
                }
                State::Diag => {
                    ops.push(if x[i - 1] == y[j - 1] {
                        AlignmentOperation::Match
                    } else {
                        AlignmentOperation::Subst
                    });
                    i -= 1;
                    j -= 1;
                    state = State::Best;
                }
                State::Del => {
                    ops.push(AlignmentOperation::Del);
                    let extended = i > 1 && add(self.del[at - cols], extend) == self.del[at];
                    i -= 1;
                    state = if extended { State::Del } else { State::Best };
                }
                State::Ins => {
                    ops.push(AlignmentOperation::Ins);
                    let extended = j > 1 && add(self.ins[at - 1], extend) == self.ins[at];
                    j -= 1;
                    state = if extended { State::Ins } else { State::Best };
                }
            }
        }
        ops.reverse();
        AlignmentResult {
            score,
            x_start: i,
            x_end: end_i,
            y_start: j,
            y_end: end_j,
            ops,
            mode,
        }
    }
}

#[inline]
fn add(a: i32, b: i32) -> i32 {
    if a == NEG_INF {
        NEG_INF
    } else {
        (a + b).max(NEG_INF)
    }
}

/// Align `x` against `y` with a fresh [`Aligner`].
pub fn align<F: MatchFunc + Clone>(
    x: &[u8],
    y: &[u8],
    scoring: &Scoring<F>,
    mode: AlignmentMode,
) -> AlignmentResult {
    Aligner::new(scoring.clone()).align(x, y, mode)
}
