//! Sequence analysis primitives.
//!
//! * [`alphabets`]: symbol sets, rank transforms, q-gram encoding, DNA helpers.
//! * [`suffix`]: suffix arrays (SA-IS), BWT, its inverse, `Less` and sampled `Occ` tables.
//! * [`bitrank`]: rank/select over bit vectors.
//! * [`fmindex`]: FM-index backward search, and the bidirectional FMD-index with SMEM search.
//! * [`qgram`]: q-gram position index.
//! * [`pattern_matching`]: exact online matchers (KMP, Horspool, BNDM, BOM, Shift-And, naive).
//! * [`approx`]: k-differences search (Ukkonen's cutoff, Myers' bit-vector).
//! * [`align`]: affine-gap pairwise alignment (global, semiglobal, local).
//! * [`io`]: streaming FASTA, FASTQ and BED readers and writers.
//! * [`bench`]: the timing harness behind the `bench` binary.
//!
//! All positions are 0-based; intervals are half-open.

pub mod align;
pub mod alphabets;
pub mod approx;
pub mod bench;
pub mod bitrank;
pub mod error;
pub mod fmindex;
pub mod io;
pub mod pattern_matching;
pub mod qgram;
pub mod suffix;

pub use error::{Error, Result};
