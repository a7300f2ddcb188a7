//! BED: tab-separated `chrom start end [name [score [strand [...]]]]`, with
//! 0-based half-open coordinates. `track`, `browser` and `#` lines are skipped.
//! Columns after the sixth are kept verbatim.

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use super::{utf8, Lines};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strand {
    Forward,
    Reverse,
    Unknown,
}

impl FromStr for Strand {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "+" => Ok(Strand::Forward),
            "-" => Ok(Strand::Reverse),
            "." => Ok(Strand::Unknown),
            _ => Err(()),
        }
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strand::Forward => "+",
            Strand::Reverse => "-",
            Strand::Unknown => ".",
        })
    }
}

/// A BED feature. Optional columns are positional: a later one is only
/// written if all earlier ones are present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BedRecord {
    pub chrom: String,
    pub start: u64,
    pub end: u64,
    pub name: Option<String>,
    pub score: Option<String>,
    pub strand: Option<Strand>,
    pub extra: Vec<String>,
}

impl BedRecord {
    pub fn new(chrom: &str, start: u64, end: u64) -> Self {
        BedRecord {
            chrom: chrom.to_owned(),
            start,
            end,
            name: None,
            score: None,
            strand: None,
            extra: Vec::new(),
        }
    }

    pub fn len(&self) -> u64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }

    fn parse(line: &str, n: usize) -> Result<Self> {
        let err = |msg: String| Error::Format { line: n, msg };
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 3 {
            return Err(err(format!(
                "expected at least 3 columns, found {}",
                fields.len()
            )));
        }
        let coord = |s: &str, what: &str| {
            s.parse::<u64>()
                .map_err(|_| err(format!("invalid {what} coordinate {s:?}")))
        };
        let start = coord(fields[1], "start")?;
        let end = coord(fields[2], "end")?;
        if end <= start {
            return Err(err(format!("end {end} is not after start {start}")));
        }
        if fields[0].is_empty() {
            return Err(err("empty chromosome name".into()));
        }
        let strand = match fields.get(5) {
            Some(s) => Some(
                s.parse::<Strand>()
                    .map_err(|_| err(format!("invalid strand {s:?}")))?,
            ),
            None => None,
        };
        Ok(BedRecord {
            chrom: fields[0].to_owned(),
            start,
            end,
            name: fields.get(3).map(|s| s.to_string()),
            score: fields.get(4).map(|s| s.to_string()),
            strand,
            extra: fields.iter().skip(6).map(|s| s.to_string()).collect(),
        })
    }
}

pub struct Reader<R> {
    lines: Lines<R>,
}

impl Reader<BufReader<File>> {
    pub fn from_file<P: AsRef<Path>>(path: P) -> io::Result<Self> {
        Ok(Reader::new(BufReader::new(File::open(path)?)))
    }
}

impl<R: BufRead> Reader<R> {
    pub fn new(inner: R) -> Self {
        Reader {
            lines: Lines::new(inner),
        }
    }

    pub fn read(&mut self) -> Result<Option<BedRecord>> {
        loop {
            let Some(l) = self.lines.next_line()? else {
                return Ok(None);
            };
            if l.is_empty()
                || l.starts_with(b"#")
                || l.starts_with(b"track")
                || l.starts_with(b"browser")
            {
                continue;
            }
            let l = l.to_vec();
            let n = self.lines.line();
            return BedRecord::parse(utf8(&l, n)?, n).map(Some);
        }
    }

    pub fn records(self) -> Records<R> {
        Records { reader: self }
    }
}

pub struct Records<R> {
    reader: Reader<R>,
}

impl<R: BufRead> Iterator for Records<R> {
    type Item = Result<BedRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        self.reader.read().transpose()
    }
}

pub fn bed_records<R: BufRead>(source: R) -> Records<R> {
    Reader::new(source).records()
}

pub struct Writer<W: Write> {
    inner: W,
}

impl Writer<io::BufWriter<File>> {
    pub fn to_file<P: AsRef<Path>>(path: P) -> io::Result<Self> {
        Ok(Writer::new(io::BufWriter::new(File::create(path)?)))
    }
}

impl<W: Write> Writer<W> {
    pub fn new(inner: W) -> Self {
        Writer { inner }
    }

    pub fn write(&mut self, record: &BedRecord) -> io::Result<()> {
        let invalid = |msg: &str| io::Error::new(io::ErrorKind::InvalidInput, msg.to_owned());
        if record.end <= record.start {
            return Err(invalid("BED end must be after start"));
        }
        write!(
            self.inner,
            "{}\t{}\t{}",
            record.chrom, record.start, record.end
        )?;
        let strand = record.strand.map(|s| s.to_string());
        let optional = [
            record.name.as_deref(),
            record.score.as_deref(),
            strand.as_deref(),
        ];
        let present = optional
            .iter()
            .rposition(Option::is_some)
            .map_or(0, |i| i + 1);
        if !record.extra.is_empty() && present < 3 {
            return Err(invalid("extra BED columns require name, score and strand"));
        }
        for field in &optional[..present] {
            let field = field
                .ok_or_else(|| invalid("BED columns are positional; a middle column is missing"))?;
            write!(self.inner, "\t{field}")?;
        }
        for field in &record.extra {
            write!(self.inner, "\t{field}")?;
        }
        self.inner.write_all(b"\n")
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }

    pub fn into_inner(self) -> W {
        self.inner
    }
}
