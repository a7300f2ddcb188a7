//! FASTQ with strict four-line records: `@id description`, sequence, `+`
//! (anything after it is ignored), quality string of the sequence's length.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use super::{check_id, split_header, Lines, SeqRecord};
use crate::error::{Error, Result};

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

    fn required_line(&mut self) -> Result<Vec<u8>> {
        let line = self.lines.line();
        match self.lines.next_line()? {
            Some(l) => Ok(l.to_vec()),
            None => Err(Error::UnexpectedEof { line }),
        }
    }

    pub fn read(&mut self) -> Result<Option<SeqRecord>> {
        let header = loop {
            match self.lines.next_line()? {
                None => return Ok(None),
                Some([]) => continue,
                Some(l) => break l.to_vec(),
            }
        };
        let header_line = self.lines.line();
        if header[0] != b'@' {
            return Err(Error::Format {
                line: header_line,
                msg: "expected '@' at start of record".into(),
            });
        }
        let (id, desc) = split_header(&header[1..], header_line)?;
        let seq = self.required_line()?;
        let sep = self.required_line()?;
        if sep.first() != Some(&b'+') {
            return Err(Error::Format {
                line: self.lines.line(),
                msg: "expected '+' separator line".into(),
            });
        }
        let qual = self.required_line()?;
        if qual.len() != seq.len() {
            return Err(Error::Format {
                line: self.lines.line(),
                msg: format!(
                    "quality length {} differs from sequence length {}",
                    qual.len(),
                    seq.len()
                ),
            });
        }
        Ok(Some(SeqRecord {
            id,
            desc,
            seq,
            qual: Some(qual),
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

pub fn fastq_records<R: BufRead>(source: R) -> Records<R> {
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

    pub fn write(
        &mut self,
        id: &str,
        desc: Option<&str>,
        seq: &[u8],
        qual: &[u8],
    ) -> io::Result<()> {
        check_id(id)?;
        if seq.len() != qual.len() {
            return Err(io::Error::new(
                io::ErrorKind::InvalidInput,
                "quality and sequence lengths differ",
            ));
        }
        self.inner.write_all(b"@")?;
        self.inner.write_all(id.as_bytes())?;
        if let Some(d) = desc {
            self.inner.write_all(b" ")?;
            self.inner.write_all(d.as_bytes())?;
        }
        self.inner.write_all(b"\n")?;
        self.inner.write_all(seq)?;
        self.inner.write_all(b"\n+\n")?;
        self.inner.write_all(qual)?;
        self.inner.write_all(b"\n")
    }

    pub fn write_record(&mut self, record: &SeqRecord) -> io::Result<()> {
        let qual = record.qual.as_deref().ok_or_else(|| {
            io::Error::new(io::ErrorKind::InvalidInput, "record has no quality string")
        })?;
        self.write(&record.id, record.desc.as_deref(), &record.seq, qual)
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }

    pub fn into_inner(self) -> W {
        self.inner
    }
}
