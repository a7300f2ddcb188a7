//! FASTA: a `>id description` header followed by any number of sequence lines.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use super::{check_id, split_header, Lines, SeqRecord};
use crate::error::{Error, Result};

pub const LINE_WIDTH: usize = 60;

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

    /// Read the next record, or `None` at end of input.
    pub fn read(&mut self) -> Result<Option<SeqRecord>> {
        let (header, line) = loop {
            match self.lines.next_line()? {
                None => return Ok(None),
                Some([]) => continue,
                Some(l) if l[0] == b'>' => break (l[1..].to_vec(), self.lines.line()),
                Some(_) => {
                    return Err(Error::Format {
                        line: self.lines.line(),
                        msg: "expected '>' at start of record".into(),
                    })
                }
            }
        };
        let (id, desc) = split_header(&header, line)?;
        let mut seq = Vec::new();
        while let Some(l) = self.lines.next_line()? {
            if l.first() == Some(&b'>') {
                self.lines.unread();
                break;
            }
            seq.extend_from_slice(l);
        }
        Ok(Some(SeqRecord {
            id,
            desc,
            seq,
            qual: None,
        }))
    }

    pub fn records(self) -> Records<R> {
        Records { reader: self }
    }
}

pub struct Records<R> {
    reader: Reader<R>,
}

impl<R: BufRead> Iterator for Records<R> {
    type Item = Result<SeqRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        self.reader.read().transpose()
    }
}

/// Parse all records from `source`.
pub fn fasta_records<R: BufRead>(source: R) -> Records<R> {
    Reader::new(source).records()
}

pub struct Writer<W: Write> {
    inner: W,
    line_width: usize,
}

impl Writer<io::BufWriter<File>> {
    pub fn to_file<P: AsRef<Path>>(path: P) -> io::Result<Self> {
        Ok(Writer::new(io::BufWriter::new(File::create(path)?)))
    }
}

impl<W: Write> Writer<W> {
    /// Writer wrapping sequences at 60 columns.
    pub fn new(inner: W) -> Self {
        Self::with_line_width(inner, LINE_WIDTH)
    }

    pub fn with_line_width(inner: W, line_width: usize) -> Self {
        Writer {
            inner,
            line_width: line_width.max(1),
        }
    }

    pub fn write(&mut self, id: &str, desc: Option<&str>, seq: &[u8]) -> io::Result<()> {
        check_id(id)?;
        self.inner.write_all(b">")?;
        self.inner.write_all(id.as_bytes())?;
        if let Some(d) = desc {
            self.inner.write_all(b" ")?;
            self.inner.write_all(d.as_bytes())?;
        }
        self.inner.write_all(b"\n")?;
        for chunk in seq.chunks(self.line_width) {
            self.inner.write_all(chunk)?;
            self.inner.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn write_record(&mut self, record: &SeqRecord) -> io::Result<()> {
        self.write(&record.id, record.desc.as_deref(), &record.seq)
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }

    pub fn into_inner(self) -> W {
        self.inner
    }
}
