//! Ukkonen's cutoff variant of the edit distance dynamic program (1985).
//!
//! Values above k are all equivalent for thresholding, so cells are capped at
//! k + 1 and each column is only computed up to one row below the last active
//! row (the deepest row with a value ≤ k).

#[derive(Clone, Debug)]
pub struct Ukkonen {
    pattern: Vec<u8>,
}

impl Ukkonen {
    pub fn new(pattern: &[u8]) -> Self {
        Ukkonen {
            pattern: pattern.to_vec(),
        }
    }

    pub fn find_all<'a>(&'a self, text: &'a [u8], k: usize) -> Matches<'a> {
        let m = self.pattern.len();
        let column: Vec<usize> = (0..=m).map(|i| i.min(k + 1)).collect();
        Matches {
            pattern: &self.pattern,
            text,
            k,
            column,
            last_active: k.min(m),
            pos: 0,
        }
    }
}

pub struct Matches<'a> {
    pattern: &'a [u8],
    text: &'a [u8],
    k: usize,
    column: Vec<usize>,
    last_active: usize,
    pos: usize,
}

impl Iterator for Matches<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        let m = self.pattern.len();
        let cap = self.k + 1;
        while self.pos < self.text.len() {
            let c = self.text[self.pos];
            let j = self.pos;
            self.pos += 1;

            let rows = (self.last_active + 1).min(m);
            let mut diag = self.column[0];
            for i in 1..=rows {
                // the row just below the active region is known to exceed k
                let old = if i > self.last_active {
                    cap
                } else {
                    self.column[i]
                };
                let value = (diag + usize::from(self.pattern[i - 1] != c))
                    .min(self.column[i - 1] + 1)
                    .min(old + 1)
                    .min(cap);
                diag = old;
                self.column[i] = value;
            }
            let mut last = rows;
            while self.column[last] > self.k {
                last -= 1;
            }
            self.last_active = last;
            if last == m {
                return Some((j, self.column[m]));
            }
        }
        None
    }
}

/// All `(end, distance)` pairs with distance ≤ k, see [`Ukkonen`].
pub fn ukkonen_find(pattern: &[u8], text: &[u8], k: usize) -> Vec<(usize, usize)> {
    Ukkonen::new(pattern).find_all(text, k).collect()
}
