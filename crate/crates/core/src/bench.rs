//! Repeated-search timing harness for the exact matchers.
//!
//! Each selected algorithm runs `iterations` full passes over the text. With
//! `include_init` (the default) the matcher is rebuilt from the pattern in
//! every pass, so preprocessing cost is part of the measurement. Match counts
//! are taken once per algorithm and must agree across all algorithms.

use std::fmt::Write as _;
use std::fs::File;
use std::hint::black_box;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::io::fasta;
use crate::pattern_matching::{Algorithm, Matcher};

/// The default workload pattern.
pub const DEFAULT_PATTERN: &[u8] = b"GCGCGTACACACCGCCCG";
pub const DEFAULT_ITERATIONS: usize = 10_000;

/// Algorithms run for `all`, in report order.
pub const DEFAULT_SET: [Algorithm; 4] = [
    Algorithm::Bndm,
    Algorithm::Horspool,
    Algorithm::Bom,
    Algorithm::ShiftAnd,
];

/// `DEFAULT_SET` widened with the remaining algorithms.
pub const EXTENDED_SET: [Algorithm; 6] = [
    Algorithm::Bndm,
    Algorithm::Horspool,
    Algorithm::Bom,
    Algorithm::ShiftAnd,
    Algorithm::Kmp,
    Algorithm::Naive,
];

/// Uniform random text over `alphabet` from a seeded RNG.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntheticText {
    pub len: usize,
    pub seed: u64,
    pub alphabet: Vec<u8>,
}

impl SyntheticText {
    pub fn dna(len: usize, seed: u64) -> Self {
        SyntheticText {
            len,
            seed,
            alphabet: b"ACGT".to_vec(),
        }
    }

    pub fn generate(&self) -> Result<Vec<u8>> {
        if self.alphabet.is_empty() {
            return Err(Error::InvalidAlphabet);
        }
        let mut rng = StdRng::seed_from_u64(self.seed);
        Ok((0..self.len)
            .map(|_| self.alphabet[rng.random_range(0..self.alphabet.len())])
            .collect())
    }
}

/// Parses `<len>:<seed>` or `<len>:<seed>:<alphabet>`.
impl FromStr for SyntheticText {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut parts = s.splitn(3, ':');
        let len = parts.next().unwrap_or_default();
        let seed = parts
            .next()
            .ok_or_else(|| format!("expected <len>:<seed>, got '{s}'"))?;
        let len = len
            .parse()
            .map_err(|_| format!("invalid synthetic length '{len}'"))?;
        let seed = seed
            .parse()
            .map_err(|_| format!("invalid synthetic seed '{seed}'"))?;
        let mut text = SyntheticText::dna(len, seed);
        if let Some(alphabet) = parts.next() {
            if alphabet.is_empty() {
                return Err("synthetic alphabet must not be empty".into());
            }
            text.alphabet = alphabet.as_bytes().to_vec();
        }
        Ok(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TextSource {
    /// First record of a FASTA file.
    Fasta(PathBuf),
    Synthetic(SyntheticText),
    /// Text given directly.
    Literal(Vec<u8>),
}

impl TextSource {
    pub fn load(&self) -> Result<Vec<u8>> {
        match self {
            TextSource::Fasta(path) => {
                let mut reader = fasta::Reader::new(BufReader::new(File::open(path)?));
                match reader.read()? {
                    Some(record) => Ok(record.seq),
                    None => Err(Error::Format {
                        line: 0,
                        msg: format!("{} contains no FASTA record", path.display()),
                    }),
                }
            }
            TextSource::Synthetic(synthetic) => synthetic.generate(),
            TextSource::Literal(text) => Ok(text.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub pattern: Vec<u8>,
    pub text: TextSource,
    pub iterations: usize,
    pub include_init: bool,
}

impl BenchConfig {
    /// The default workload (four algorithms, default pattern, 10,000
    /// iterations, construction included) over `text`.
    pub fn new(text: TextSource) -> Self {
        BenchConfig {
            algorithms: DEFAULT_SET.to_vec(),
            pattern: DEFAULT_PATTERN.to_vec(),
            text,
            iterations: DEFAULT_ITERATIONS,
            include_init: true,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::InvalidParameter("iterations must be at least 1"));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidParameter("no algorithm selected"));
        }
        if self.pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        for algorithm in &self.algorithms {
            if let Some(max) = algorithm.max_pattern_len() {
                if self.pattern.len() > max {
                    return Err(Error::PatternTooLong {
                        len: self.pattern.len(),
                        max,
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub algorithm: Algorithm,
    pub iterations: usize,
    pub total: Duration,
    pub matches: usize,
}

impl BenchRow {
    pub fn total_ms(&self) -> f64 {
        self.total.as_secs_f64() * 1e3
    }

    pub fn mean_us(&self) -> f64 {
        self.total.as_secs_f64() * 1e6 / self.iterations as f64
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub text_len: usize,
    pub pattern_len: usize,
    pub include_init: bool,
    pub rows: Vec<BenchRow>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Tsv,
    Pretty,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tsv" => Ok(ReportFormat::Tsv),
            "pretty" => Ok(ReportFormat::Pretty),
            _ => Err(format!("unknown format '{s}' (expected tsv or pretty)")),
        }
    }
}

pub const TSV_HEADER: &str = "algorithm\titerations\ttotal_ms\tmean_us\tmatches";

fn time_algorithm(algorithm: Algorithm, cfg: &BenchConfig, text: &[u8]) -> Result<BenchRow> {
    let prebuilt = algorithm.build(&cfg.pattern)?;
    let matches = prebuilt.find_all(text).count();
    let start = Instant::now();
    if cfg.include_init {
        for _ in 0..cfg.iterations {
            let matcher = algorithm.build(black_box(&cfg.pattern))?;
            black_box(matcher.find_all(black_box(text)).count());
        }
    } else {
        for _ in 0..cfg.iterations {
            black_box(prebuilt.find_all(black_box(text)).count());
        }
    }
    Ok(BenchRow {
        algorithm,
        iterations: cfg.iterations,
        total: start.elapsed(),
        matches,
    })
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    cfg.validate()?;
    let text = cfg.text.load()?;
    let mut rows = Vec::with_capacity(cfg.algorithms.len());
    for &algorithm in &cfg.algorithms {
        let row = time_algorithm(algorithm, cfg, &text)?;
        if let Some(first) = rows.first() {
            let first: &BenchRow = first;
            if first.matches != row.matches {
                return Err(Error::InternalConsistency(format!(
                    "{} found {} matches but {} found {}",
                    first.algorithm.label(),
                    first.matches,
                    row.algorithm.label(),
                    row.matches
                )));
            }
        }
        rows.push(row);
    }
    Ok(BenchReport {
        text_len: text.len(),
        pattern_len: cfg.pattern.len(),
        include_init: cfg.include_init,
        rows,
    })
}

pub fn render_report(report: &BenchReport, format: ReportFormat) -> String {
    let mut out = String::new();
    match format {
        ReportFormat::Tsv => {
            out.push_str(TSV_HEADER);
            out.push('\n');
            for row in &report.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{:.3}\t{:.3}\t{}",
                    row.algorithm.name(),
                    row.iterations,
                    row.total_ms(),
                    row.mean_us(),
                    row.matches
                );
            }
        }
        ReportFormat::Pretty => {
            let times: Vec<String> = report
                .rows
                .iter()
                .map(|r| format!("{:.0}ms", r.total_ms()))
                .collect();
            let name_width = report
                .rows
                .iter()
                .map(|r| r.algorithm.label().len())
                .chain(["Algorithm".len()])
                .max()
                .unwrap_or(0);
            let time_width = times
                .iter()
                .map(String::len)
                .chain(["Time".len()])
                .max()
                .unwrap_or(0);
            let rule = "-".repeat(name_width + time_width + 3);
            let _ = writeln!(out, "{rule}");
            let _ = writeln!(
                out,
                "{:<name_width$}   {:>time_width$}",
                "Algorithm", "Time"
            );
            let _ = writeln!(out, "{rule}");
            for (row, time) in report.rows.iter().zip(&times) {
                let _ = writeln!(
                    out,
                    "{:<name_width$}   {time:>time_width$}",
                    row.algorithm.label()
                );
            }
            let _ = writeln!(out, "{rule}");
            if let Some(row) = report.rows.first() {
                let _ =
                    writeln!(
                    out,
                    "{} iterations, pattern length {}, text length {}, {} matches, construction {}",
                    row.iterations,
                    report.pattern_len,
                    report.text_len,
                    row.matches,
                    if report.include_init { "included" } else { "excluded" }
                );
            }
        }
    }
    out
}

pub fn emit_report<W: Write>(
    report: &BenchReport,
    format: ReportFormat,
    out: &mut W,
) -> io::Result<()> {
    out.write_all(render_report(report, format).as_bytes())
}
