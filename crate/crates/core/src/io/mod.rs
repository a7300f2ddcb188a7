//! Streaming readers and writers for FASTA, FASTQ and BED.
//!
//! Readers wrap any [`BufRead`](std::io::BufRead) and yield one record at a
//! time, so memory use is bounded by the largest record. Both `\n` and `\r\n`
//! line endings are accepted; writers always emit `\n`. Malformed input is an
//! error carrying the 1-based line number.
//!
//! ```
//! use seqlib::io::fasta;
//!
//! let data = b">chr1 test\nACGT\nAC\n>chr2\nGG\n";
//! let records: Vec<_> = fasta::Reader::new(&data[..]).records().collect::<Result<_, _>>().unwrap();
//! assert_eq!(records[0].id, "chr1");
//! assert_eq!(records[0].seq, b"ACGTAC");
//! assert_eq!(records[1].desc, None);
//! ```

use std::io::BufRead;

use crate::error::{Error, Result};

pub mod bed;
pub mod fasta;
pub mod fastq;

/// A sequence record. `qual` is only present for FASTQ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeqRecord {
    pub id: String,
    pub desc: Option<String>,
    pub seq: Vec<u8>,
    pub qual: Option<Vec<u8>>,
}

impl SeqRecord {
    pub fn new(id: &str, desc: Option<&str>, seq: &[u8]) -> Self {
        SeqRecord {
            id: id.to_owned(),
            desc: desc.map(str::to_owned),
            seq: seq.to_vec(),
            qual: None,
        }
    }

    pub fn with_qual(mut self, qual: &[u8]) -> Self {
        self.qual = Some(qual.to_vec());
        self
    }

    pub fn seq(&self) -> &[u8] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }
}

/// Line reader that tracks line numbers and strips `\n` / `\r\n`.
pub(crate) struct Lines<R> {
    inner: R,
    line: usize,
    buf: Vec<u8>,
    peeked: bool,
    eof: bool,
}

impl<R: BufRead> Lines<R> {
    pub(crate) fn new(inner: R) -> Self {
        Lines {
            inner,
            line: 0,
            buf: Vec::new(),
            peeked: false,
            eof: false,
        }
    }

    /// 1-based number of the current line.
    pub(crate) fn line(&self) -> usize {
        self.line
    }

    /// Advance to the next line; `None` at end of input.
    pub(crate) fn next_line(&mut self) -> Result<Option<&[u8]>> {
        if self.peeked {
            self.peeked = false;
            return Ok(Some(&self.buf));
        }
        if self.eof {
            return Ok(None);
        }
        self.buf.clear();
        if self.inner.read_until(b'\n', &mut self.buf)? == 0 {
            self.eof = true;
            return Ok(None);
        }
        self.line += 1;
        if self.buf.last() == Some(&b'\n') {
            self.buf.pop();
        }
        if self.buf.last() == Some(&b'\r') {
            self.buf.pop();
        }
        Ok(Some(&self.buf))
    }

    /// Return the current line again on the next call to `next_line`.
    pub(crate) fn unread(&mut self) {
        self.peeked = true;
    }
}

pub(crate) fn utf8(bytes: &[u8], line: usize) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|_| Error::Format {
        line,
        msg: "invalid UTF-8".into(),
    })
}

/// Split a header (without its leading marker) into id and description.
pub(crate) fn split_header(header: &[u8], line: usize) -> Result<(String, Option<String>)> {
    let header = utf8(header, line)?;
    let mut parts = header.splitn(2, char::is_whitespace);
    let id = parts.next().unwrap_or("");
    if id.is_empty() {
        return Err(Error::Format {
            line,
            msg: "empty record id".into(),
        });
    }
    let desc = parts
        .next()
        .map(str::trim)
        .filter(|d| !d.is_empty())
        .map(str::to_owned);
    Ok((id.to_owned(), desc))
}

pub(crate) fn check_id(id: &str) -> std::io::Result<()> {
    if id.is_empty() || id.contains(char::is_whitespace) {
        Err(std::io::Error::new(
            std::io::ErrorKind::InvalidInput,
            format!("invalid record id {id:?}"),
        ))
    } else {
        Ok(())
    }
}
