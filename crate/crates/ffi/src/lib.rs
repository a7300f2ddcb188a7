//! C ABI for `seqlib`.
//!
//! Conventions:
//!
//! * Every fallible function returns a [`SeqlibStatus`]; results are written
//!   through out-pointers only on success.
//! * Index and matcher objects are opaque handles created by a `*_new`
//!   function and released with the matching `*_free`. Handles are immutable
//!   after construction and may be shared between threads for queries.
//! * Byte sequences are passed as pointer + length; the pointer may be NULL
//!   when the length is 0.
//! * Variable-size results are written into caller buffers: `*out_len` is
//!   always set to the number of results, and `SEQLIB_STATUS_BUFFER_TOO_SMALL`
//!   is returned (with nothing written) if `capacity` is smaller. Call once
//!   with capacity 0 to size the buffer.
//! * Panics never cross the boundary; they are reported as
//!   `SEQLIB_STATUS_PANIC`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use seqlib::align::{self, AlignmentMode, AlignmentOperation, Scoring};
use seqlib::approx::{Myers, Ukkonen};
use seqlib::fmindex::{FmIndex, FmdIndex};
use seqlib::pattern_matching::{Algorithm, AnyMatcher, Matcher, WORD_BITS};
use seqlib::suffix::SuffixArray;
use seqlib::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqlibStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    SymbolNotInAlphabet = 3,
    PatternTooLong = 4,
    EmptyPattern = 5,
    BufferTooSmall = 6,
    OutOfBounds = 7,
    Io = 8,
    Format = 9,
    Internal = 10,
    Panic = 11,
}

impl From<Error> for SeqlibStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::SymbolNotInAlphabet(_) => SeqlibStatus::SymbolNotInAlphabet,
            Error::PatternTooLong { .. } => SeqlibStatus::PatternTooLong,
            Error::EmptyPattern => SeqlibStatus::EmptyPattern,
            Error::OutOfBounds { .. } | Error::NotEnoughBits { .. } => SeqlibStatus::OutOfBounds,
            Error::Io(_) => SeqlibStatus::Io,
            Error::Format { .. } | Error::UnexpectedEof { .. } => SeqlibStatus::Format,
            Error::InternalConsistency(_) => SeqlibStatus::Internal,
            Error::InvalidAlphabet
            | Error::QTooLarge { .. }
            | Error::InvalidSentinel
            | Error::IndexTextMismatch
            | Error::BucketTableTooLarge { .. }
            | Error::LengthMismatch { .. }
            | Error::InvalidParameter(_) => SeqlibStatus::InvalidArgument,
        }
    }
}

type FfiResult = Result<(), SeqlibStatus>;

fn guard(f: impl FnOnce() -> FfiResult) -> SeqlibStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SeqlibStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => SeqlibStatus::Panic,
    }
}

unsafe fn bytes<'a>(data: *const u8, len: usize) -> Result<&'a [u8], SeqlibStatus> {
    if len == 0 {
        Ok(&[])
    } else if data.is_null() {
        Err(SeqlibStatus::NullPointer)
    } else {
        Ok(slice::from_raw_parts(data, len))
    }
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, SeqlibStatus> {
    h.as_ref().ok_or(SeqlibStatus::NullPointer)
}

unsafe fn write_items<T: Copy>(
    items: &[T],
    out: *mut T,
    capacity: usize,
    out_len: *mut usize,
) -> FfiResult {
    if out_len.is_null() {
        return Err(SeqlibStatus::NullPointer);
    }
    *out_len = items.len();
    if items.len() > capacity {
        return Err(SeqlibStatus::BufferTooSmall);
    }
    if !items.is_empty() {
        if out.is_null() {
            return Err(SeqlibStatus::NullPointer);
        }
        ptr::copy_nonoverlapping(items.as_ptr(), out, items.len());
    }
    Ok(())
}

unsafe fn store_handle<T>(value: T, out: *mut *mut T) -> FfiResult {
    if out.is_null() {
        return Err(SeqlibStatus::NullPointer);
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn seqlib_status_message(status: i32) -> *const c_char {
    let msg: &'static [u8] = match status {
        0 => b"ok\0",
        1 => b"null pointer argument\0",
        2 => b"invalid argument\0",
        3 => b"symbol not in alphabet\0",
        4 => b"pattern too long for the algorithm\0",
        5 => b"empty pattern\0",
        6 => b"output buffer too small\0",
        7 => b"index out of bounds\0",
        8 => b"I/O error\0",
        9 => b"format error\0",
        10 => b"internal consistency error\0",
        11 => b"panic inside the library\0",
        _ => b"unknown status\0",
    };
    msg.as_ptr().cast()
}

/// FM-index over a text together with its suffix array.
pub struct SeqlibFmIndex {
    fm: FmIndex,
    sa: SuffixArray,
}

impl SeqlibFmIndex {
    fn search(
        &self,
        pattern: &[u8],
    ) -> Result<Option<seqlib::fmindex::SearchInterval>, SeqlibStatus> {
        match self.fm.backward_search(pattern.iter()) {
            Ok(interval) => Ok(Some(interval)),
            // a symbol that does not occur in the text cannot match
            Err(Error::SymbolNotInAlphabet(_)) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }
}

/// Build an FM-index over `text`, which must not contain `$` (used as the
/// sentinel). `sampling_rate` is the occurrence table sampling rate (≥ 1).
///
/// # Safety
/// `text` must point to `text_len` readable bytes (or be NULL with length 0);
/// `out` must be a valid pointer to store the handle in.
#[no_mangle]
pub unsafe extern "C" fn seqlib_fm_index_new(
    text: *const u8,
    text_len: usize,
    sampling_rate: usize,
    out: *mut *mut SeqlibFmIndex,
) -> SeqlibStatus {
    guard(|| {
        let text = bytes(text, text_len)?;
        let (fm, sa) = FmIndex::from_text(text, sampling_rate)?;
        store_handle(SeqlibFmIndex { fm, sa }, out)
    })
}

/// Number of occurrences of `pattern`. The empty pattern occurs `text_len + 1` times.
///
/// # Safety
/// `index` must be a live handle from `seqlib_fm_index_new`; `pattern` must
/// point to `pattern_len` bytes; `out_count` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn seqlib_fm_index_count(
    index: *const SeqlibFmIndex,
    pattern: *const u8,
    pattern_len: usize,
    out_count: *mut usize,
) -> SeqlibStatus {
    guard(|| {
        let index = handle(index)?;
        let pattern = bytes(pattern, pattern_len)?;
        if out_count.is_null() {
            return Err(SeqlibStatus::NullPointer);
        }
        *out_count = index.search(pattern)?.map_or(0, |iv| iv.size());
        Ok(())
    })
}

/// Start positions of `pattern` in ascending order.
///
/// # Safety
/// As for `seqlib_fm_index_count`; `out_positions` must have room for
/// `capacity` elements and `out_len` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn seqlib_fm_index_locate(
    index: *const SeqlibFmIndex,
    pattern: *const u8,
    pattern_len: usize,
    out_positions: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> SeqlibStatus {
    guard(|| {
        let index = handle(index)?;
        let pattern = bytes(pattern, pattern_len)?;
        let mut positions = match index.search(pattern)? {
            Some(interval) => interval.occ(&index.sa)?,
            None => Vec::new(),
        };
        positions.sort_unstable();
        write_items(&positions, out_positions, capacity, out_len)
    })
}

/// Release an FM-index. NULL is ignored.
///
/// # Safety
/// `index` must be NULL or a handle from `seqlib_fm_index_new` not freed before.
#[no_mangle]
pub unsafe extern "C" fn seqlib_fm_index_free(index: *mut SeqlibFmIndex) {
    if !index.is_null() {
        drop(Box::from_raw(index));
    }
}

/// FMD-index over a DNA text and its reverse complement.
pub struct SeqlibFmdIndex {
    fmd: FmdIndex,
}

/// A supermaximal exact match `pattern[pattern_start..pattern_end)` and its
/// number of occurrences on both strands.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeqlibSmem {
    pub pattern_start: usize,
    pub pattern_end: usize,
    pub occurrences: usize,
}

/// Build an FMD-index over a text of `A`, `C`, `G`, `T` and `N`.
///
/// # Safety
/// `text` must point to `text_len` readable bytes; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn seqlib_fmd_index_new(
    text: *const u8,
    text_len: usize,
    out: *mut *mut SeqlibFmdIndex,
) -> SeqlibStatus {
    guard(|| {
        let fmd = FmdIndex::new(bytes(text, text_len)?)?;
        store_handle(SeqlibFmdIndex { fmd }, out)
    })
}

/// All SMEMs of `pattern`, ordered by start position.
///
/// # Safety
/// `index` must be a live handle; `pattern` must point to `pattern_len`
/// bytes; `out` must have room for `capacity` elements; `out_len` must be
/// valid for writing.
#[no_mangle]
pub unsafe extern "C" fn seqlib_fmd_index_smems(
    index: *const SeqlibFmdIndex,
    pattern: *const u8,
    pattern_len: usize,
    out: *mut SeqlibSmem,
    capacity: usize,
    out_len: *mut usize,
) -> SeqlibStatus {
    guard(|| {
        let index = handle(index)?;
        let pattern = bytes(pattern, pattern_len)?;
        let smems: Vec<SeqlibSmem> = index
            .fmd
            .all_smems(pattern)?
            .iter()
            .map(|s| SeqlibSmem {
                pattern_start: s.pattern_start,
                pattern_end: s.pattern_end,
                occurrences: s.interval.size,
            })
            .collect();
        write_items(&smems, out, capacity, out_len)
    })
}

/// Release an FMD-index. NULL is ignored.
///
/// # Safety
/// `index` must be NULL or a handle from `seqlib_fmd_index_new` not freed before.
#[no_mangle]
pub unsafe extern "C" fn seqlib_fmd_index_free(index: *mut SeqlibFmdIndex) {
    if !index.is_null() {
        drop(Box::from_raw(index));
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqlibAlgorithm {
    Naive = 0,
    Kmp = 1,
    Horspool = 2,
    Bndm = 3,
    Bom = 4,
    ShiftAnd = 5,
}

impl From<SeqlibAlgorithm> for Algorithm {
    fn from(a: SeqlibAlgorithm) -> Self {
        match a {
            SeqlibAlgorithm::Naive => Algorithm::Naive,
            SeqlibAlgorithm::Kmp => Algorithm::Kmp,
            SeqlibAlgorithm::Horspool => Algorithm::Horspool,
            SeqlibAlgorithm::Bndm => Algorithm::Bndm,
            SeqlibAlgorithm::Bom => Algorithm::Bom,
            SeqlibAlgorithm::ShiftAnd => Algorithm::ShiftAnd,
        }
    }
}

/// An exact matcher preprocessed for one pattern.
pub struct SeqlibMatcher {
    matcher: AnyMatcher,
}

/// Preprocess `pattern` for `algorithm` (given as a `SeqlibAlgorithm` value).
/// BNDM and Shift-And accept patterns of at most 64 bytes.
///
/// # Safety
/// `pattern` must point to `pattern_len` bytes; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn seqlib_matcher_new(
    algorithm: i32,
    pattern: *const u8,
    pattern_len: usize,
    out: *mut *mut SeqlibMatcher,
) -> SeqlibStatus {
    guard(|| {
        let algorithm = match algorithm {
            0 => SeqlibAlgorithm::Naive,
            1 => SeqlibAlgorithm::Kmp,
            2 => SeqlibAlgorithm::Horspool,
            3 => SeqlibAlgorithm::Bndm,
            4 => SeqlibAlgorithm::Bom,
            5 => SeqlibAlgorithm::ShiftAnd,
            _ => return Err(SeqlibStatus::InvalidArgument),
        };
        let matcher = Algorithm::from(algorithm).build(bytes(pattern, pattern_len)?)?;
        store_handle(SeqlibMatcher { matcher }, out)
    })
}

/// Start positions of all (possibly overlapping) occurrences, ascending.
///
/// # Safety
/// `matcher` must be a live handle; `text` must point to `text_len` bytes;
/// `out_positions` must have room for `capacity` elements; `out_len` must be
/// valid for writing.
#[no_mangle]
pub unsafe extern "C" fn seqlib_matcher_find_all(
    matcher: *const SeqlibMatcher,
    text: *const u8,
    text_len: usize,
    out_positions: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> SeqlibStatus {
    guard(|| {
        let matcher = handle(matcher)?;
        let positions: Vec<usize> = matcher.matcher.find_all(bytes(text, text_len)?).collect();
        write_items(&positions, out_positions, capacity, out_len)
    })
}

/// Release a matcher. NULL is ignored.
///
/// # Safety
/// `matcher` must be NULL or a handle from `seqlib_matcher_new` not freed before.
#[no_mangle]
pub unsafe extern "C" fn seqlib_matcher_free(matcher: *mut SeqlibMatcher) {
    if !matcher.is_null() {
        drop(Box::from_raw(matcher));
    }
}

/// A text end position (inclusive) where the pattern matches within `distance` edits.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeqlibApproxHit {
    pub end: usize,
    pub distance: usize,
}

/// All end positions where `pattern` matches a substring of `text` with at
/// most `k` edits, ascending. Uses the bit-parallel algorithm for patterns of
/// up to 64 bytes and the cutoff dynamic program otherwise.
///
/// # Safety
/// `pattern` and `text` must point to readable buffers of the given lengths;
/// `out` must have room for `capacity` elements; `out_len` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn seqlib_approx_find(
    pattern: *const u8,
    pattern_len: usize,
    text: *const u8,
    text_len: usize,
    k: usize,
    out: *mut SeqlibApproxHit,
    capacity: usize,
    out_len: *mut usize,
) -> SeqlibStatus {
    guard(|| {
        let pattern = bytes(pattern, pattern_len)?;
        let text = bytes(text, text_len)?;
        if pattern.is_empty() {
            return Err(SeqlibStatus::EmptyPattern);
        }
        let to_hit = |(end, distance)| SeqlibApproxHit { end, distance };
        let hits: Vec<SeqlibApproxHit> = if pattern.len() <= WORD_BITS {
            Myers::new(pattern)?.find_all(text, k).map(to_hit).collect()
        } else {
            Ukkonen::new(pattern)
                .find_all(text, k)
                .map(to_hit)
                .collect()
        };
        write_items(&hits, out, capacity, out_len)
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqlibAlignMode {
    Global = 0,
    Semiglobal = 1,
    Local = 2,
}

/// Affine gap scoring; a gap of length `l` scores `gap_open + l * gap_extend`.
/// Gap penalties must be ≤ 0.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeqlibScoring {
    pub gap_open: i32,
    pub gap_extend: i32,
    pub match_score: i32,
    pub mismatch_score: i32,
}

/// Optimal score and half-open aligned spans of both sequences.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SeqlibAlignment {
    pub score: i32,
    pub x_start: usize,
    pub x_end: usize,
    pub y_start: usize,
    pub y_end: usize,
}

/// Align `x` against `y`. If `ops` is non-NULL, the traceback is written as
/// one byte per column: `M` match, `X` substitution, `D` gap in `y`
/// (consumes `x`), `I` gap in `x` (consumes `y`); `*ops_len` receives its
/// length. `ops` may be NULL (then `ops_capacity` and `ops_len` are ignored).
///
/// # Safety
/// `x`, `y` must point to readable buffers of the given lengths; `scoring`
/// and `out` must be valid pointers; if `ops` is non-NULL it must have room
/// for `ops_capacity` bytes and `ops_len` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn seqlib_align(
    x: *const u8,
    x_len: usize,
    y: *const u8,
    y_len: usize,
    scoring: *const SeqlibScoring,
    mode: i32,
    out: *mut SeqlibAlignment,
    ops: *mut u8,
    ops_capacity: usize,
    ops_len: *mut usize,
) -> SeqlibStatus {
    guard(|| {
        let x = bytes(x, x_len)?;
        let y = bytes(y, y_len)?;
        let s = handle(scoring)?;
        if out.is_null() {
            return Err(SeqlibStatus::NullPointer);
        }
        let mode = match mode {
            0 => AlignmentMode::Global,
            1 => AlignmentMode::Semiglobal,
            2 => AlignmentMode::Local,
            _ => return Err(SeqlibStatus::InvalidArgument),
        };
        let scoring =
            Scoring::from_scores(s.gap_open, s.gap_extend, s.match_score, s.mismatch_score)?;
        let result = align::align(x, y, &scoring, mode);
        *out = SeqlibAlignment {
            score: result.score,
            x_start: result.x_start,
            x_end: result.x_end,
            y_start: result.y_start,
            y_end: result.y_end,
        };
        if ops.is_null() {
            return Ok(());
        }
        let letters: Vec<u8> = result
            .ops
            .iter()
            .map(|op| match op {
                AlignmentOperation::Match => b'M',
                AlignmentOperation::Subst => b'X',
                AlignmentOperation::Del => b'D',
                AlignmentOperation::Ins => b'I',
            })
            .collect();
        write_items(&letters, ops, ops_capacity, ops_len)
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn seqlib_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
