//! Run-length encoding primitives.
//!
//! A *run* is a maximal block of one repeated byte. [`runs_of`] splits a byte
//! slice into runs left to right and [`runs_of_reversed_window`] does the same
//! for the reverse of a window without copying it.
//!
//! # `RLE1` file format
//!
//! ```text
//! "RLE1"                       4 magic bytes
//! (symbol: u8, length: uleb128)*
//! ```
//!
//! Lengths are at least 1 and two consecutive records never share a symbol,
//! so every byte string has exactly one encoding.

use std::io::{self, BufRead, BufReader, Read, Write};

use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"RLE1";

/// One run: `len` copies of `symbol`. `len` is always at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub symbol: u8,
    pub len: usize,
}

impl Run {
    pub fn new(symbol: u8, len: usize) -> Run {
        assert!(len >= 1, "run length must be at least 1");
        Run { symbol, len }
    }
}

/// Left-to-right run iterator over a byte slice. See [`runs_of`].
#[derive(Clone, Debug)]
pub struct Runs<'a> {
    text: &'a [u8],
    pos: usize,
}

/// Iterates over the maximal runs of `text` in one pass.
pub fn runs_of(text: &[u8]) -> Runs<'_> {
    Runs { text, pos: 0 }
}

impl Iterator for Runs<'_> {
    type Item = Run;

    #[inline]
    fn next(&mut self) -> Option<Run> {
        let rest = &self.text[self.pos..];
        let &symbol = rest.first()?;
        let len = rest.iter().position(|&b| b != symbol).unwrap_or(rest.len());
        self.pos += len;
        Some(Run { symbol, len })
    }
}

impl std::iter::FusedIterator for Runs<'_> {}

/// Right-to-left run iterator over `text[begin..=end]`. See
/// [`runs_of_reversed_window`].
#[derive(Clone, Debug)]
pub struct ReversedRuns<'a> {
    text: &'a [u8],
    begin: usize,
    // one past the next byte to read
    end: usize,
}

/// Iterates over the runs of the reverse of `text[begin..=end]`, scanning
/// `text` from `end` down to `begin`.
pub fn runs_of_reversed_window(text: &[u8], begin: usize, end: usize) -> Result<ReversedRuns<'_>> {
    if begin > end || end >= text.len() {
        return Err(Error::WindowOutOfRange { begin, end, len: text.len() });
    }
    Ok(ReversedRuns::new_unchecked(text, begin, end))
}

impl<'a> ReversedRuns<'a> {
    #[inline]
    pub(crate) fn new_unchecked(text: &'a [u8], begin: usize, end: usize) -> Self {
        ReversedRuns { text, begin, end: end + 1 }
    }
}

impl Iterator for ReversedRuns<'_> {
    type Item = Run;

    #[inline]
    fn next(&mut self) -> Option<Run> {
        if self.end <= self.begin {
            return None;
        }
        let window = &self.text[self.begin..self.end];
        let symbol = window[window.len() - 1];
        let len = window.iter().rev().position(|&b| b != symbol).unwrap_or(window.len());
        self.end -= len;
        Some(Run { symbol, len })
    }
}

impl std::iter::FusedIterator for ReversedRuns<'_> {}

/// Run coordinates: `alpha` is the start position and `ell` the length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunCoords {
    pub alpha: usize,
    pub ell: usize,
}

impl RunCoords {
    /// Last position of the run; `None` for the past-the-end sentinel.
    pub fn beta(&self) -> Option<usize> {
        (self.ell > 0).then(|| self.alpha + self.ell - 1)
    }
}

/// A materialized run-length encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSeq {
    runs: Vec<Run>,
    // starts[i] = alpha(i), starts.len() = runs.len() + 1
    starts: Vec<usize>,
}

impl RunSeq {
    pub fn from_bytes(text: &[u8]) -> RunSeq {
        Self::from_valid(runs_of(text).collect())
    }

    /// Validates that every run is nonempty and adjacent runs differ.
    pub fn from_runs(runs: Vec<Run>) -> Result<RunSeq> {
        if runs.iter().any(|r| r.len == 0) {
            return Err(Error::InvalidRunSeq("zero-length run"));
        }
        if runs.windows(2).any(|w| w[0].symbol == w[1].symbol) {
            return Err(Error::InvalidRunSeq("adjacent runs share a symbol"));
        }
        Ok(Self::from_valid(runs))
    }

    fn from_valid(runs: Vec<Run>) -> RunSeq {
        let mut starts = Vec::with_capacity(runs.len() + 1);
        let mut acc = 0usize;
        starts.push(0);
        for r in &runs {
            acc += r.len;
            starts.push(acc);
        }
        RunSeq { runs, starts }
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of runs.
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Length of the decoded string.
    pub fn total_len(&self) -> usize {
        self.starts[self.runs.len()]
    }

    /// Coordinates of run `i`. For `i == self.len()` returns
    /// `alpha = total_len()` and `ell = 0`.
    pub fn coords(&self, i: usize) -> Result<RunCoords> {
        if i > self.runs.len() {
            return Err(Error::RunIndexOutOfRange { index: i, runs: self.runs.len() });
        }
        let ell = self.runs.get(i).map_or(0, |r| r.len);
        Ok(RunCoords { alpha: self.starts[i], ell })
    }

    /// Index of the run containing position `pos`, if any.
    pub fn run_at(&self, pos: usize) -> Option<usize> {
        if pos >= self.total_len() {
            return None;
        }
        Some(self.starts.partition_point(|&s| s <= pos) - 1)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.total_len());
        for r in &self.runs {
            out.resize(out.len() + r.len, r.symbol);
        }
        out
    }
}

/// Malformed `RLE1` input.
#[derive(Debug, thiserror::Error)]
pub enum DecodeError {
    #[error("missing or malformed RLE1 magic header")]
    BadMagic,
    #[error("truncated run length varint at byte offset {offset}")]
    TruncatedVarint { offset: u64 },
    #[error("zero-length run at byte offset {offset}")]
    ZeroLengthRun { offset: u64 },
    #[error("adjacent runs share symbol 0x{symbol:02x} at byte offset {offset}")]
    AdjacentEqualSymbols { offset: u64, symbol: u8 },
    #[error("run length overflows a machine word at byte offset {offset}")]
    LengthOverflow { offset: u64 },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl DecodeError {
    /// Short stable identifier for each error kind.
    pub fn code(&self) -> &'static str {
        match self {
            DecodeError::BadMagic => "bad-magic",
            DecodeError::TruncatedVarint { .. } => "truncated-varint",
            DecodeError::ZeroLengthRun { .. } => "zero-length-run",
            DecodeError::AdjacentEqualSymbols { .. } => "adjacent-equal-symbols",
            DecodeError::LengthOverflow { .. } => "length-overflow",
            DecodeError::Io(_) => "io",
        }
    }
}

fn write_uleb128<W: Write>(out: &mut W, mut value: u64) -> io::Result<()> {
    let mut buf = [0u8; 10];
    let mut n = 0;
    loop {
        let byte = (value & 0x7f) as u8;
        value >>= 7;
        if value == 0 {
            buf[n] = byte;
            n += 1;
            break;
        }
        buf[n] = byte | 0x80;
        n += 1;
    }
    out.write_all(&buf[..n])
}

/// Streaming `RLE1` encoder. Bytes written through [`Write`] are merged into
/// runs across call boundaries; [`RleEncoder::finish`] flushes the last run.
pub struct RleEncoder<W: Write> {
    out: W,
    pending: Option<Run>,
}

impl<W: Write> RleEncoder<W> {
    /// Writes the magic header immediately.
    pub fn new(mut out: W) -> io::Result<Self> {
        out.write_all(MAGIC)?;
        Ok(RleEncoder { out, pending: None })
    }

    /// Appends a run, merging it with the previous one if the symbols match.
    pub fn push_run(&mut self, run: Run) -> io::Result<()> {
        match &mut self.pending {
            Some(p) if p.symbol == run.symbol => {
                p.len = p.len.checked_add(run.len).ok_or_else(|| {
                    io::Error::new(io::ErrorKind::InvalidInput, "run length overflow")
                })?;
            }
            _ => {
                if let Some(p) = self.pending.replace(run) {
                    self.emit(p)?;
                }
            }
        }
        Ok(())
    }

    fn emit(&mut self, run: Run) -> io::Result<()> {
        self.out.write_all(&[run.symbol])?;
        write_uleb128(&mut self.out, run.len as u64)
    }

    pub fn finish(mut self) -> io::Result<W> {
        if let Some(p) = self.pending.take() {
            self.emit(p)?;
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

impl<W: Write> Write for RleEncoder<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        for run in runs_of(buf) {
            self.push_run(run)?;
        }
        Ok(buf.len())
    }

    fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}

/// Encodes everything read from `input` and returns the number of input
/// bytes consumed.
pub fn encode_stream<R: Read, W: Write>(mut input: R, output: W) -> io::Result<u64> {
    let mut enc = RleEncoder::new(output)?;
    let n = io::copy(&mut input, &mut enc)?;
    enc.finish()?;
    Ok(n)
}

/// Encodes a byte slice into a fresh buffer.
pub fn encode_to_vec(text: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(MAGIC.len() + 2 * text.len().min(1 << 16));
    encode_stream(text, &mut out).expect("writing to a Vec cannot fail");
    out
}

/// Streaming `RLE1` decoder yielding runs.
///
/// The magic header is checked by [`RleReader::new`]. After the first error
/// the iterator is exhausted.
pub struct RleReader<R: Read> {
    inner: BufReader<R>,
    offset: u64,
    prev: Option<u8>,
    done: bool,
}

impl<R: Read> RleReader<R> {
    pub fn new(input: R) -> Result<Self, DecodeError> {
        let mut inner = BufReader::new(input);
        let mut magic = [0u8; 4];
        match inner.read_exact(&mut magic) {
            Ok(()) if &magic == MAGIC => {}
            Ok(()) => return Err(DecodeError::BadMagic),
            Err(e) if e.kind() == io::ErrorKind::UnexpectedEof => {
                return Err(DecodeError::BadMagic)
            }
            Err(e) => return Err(e.into()),
        }
        Ok(RleReader { inner, offset: MAGIC.len() as u64, prev: None, done: false })
    }

    fn read_byte(&mut self) -> io::Result<Option<u8>> {
        loop {
            match self.inner.fill_buf() {
                Ok([]) => return Ok(None),
                Ok(buf) => {
                    let b = buf[0];
                    self.inner.consume(1);
                    self.offset += 1;
                    return Ok(Some(b));
                }
                Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
                Err(e) => return Err(e),
            }
        }
    }

    fn read_record(&mut self) -> Result<Option<Run>, DecodeError> {
        let record_at = self.offset;
        let Some(symbol) = self.read_byte()? else {
            return Ok(None);
        };
        let len_at = self.offset;
        let mut value: u64 = 0;
        let mut shift = 0u32;
        loop {
            let byte = self.read_byte()?.ok_or(DecodeError::TruncatedVarint { offset: len_at })?;
            let payload = u64::from(byte & 0x7f);
            if shift >= 64 || (shift > 0 && payload >> (64 - shift) != 0) {
                return Err(DecodeError::LengthOverflow { offset: len_at });
            }
            value |= payload << shift;
            if byte & 0x80 == 0 {
                break;
            }
            shift += 7;
        }
        let len = usize::try_from(value).map_err(|_| DecodeError::LengthOverflow { offset: len_at })?;
        if len == 0 {
            return Err(DecodeError::ZeroLengthRun { offset: record_at });
        }
        if self.prev == Some(symbol) {
            return Err(DecodeError::AdjacentEqualSymbols { offset: record_at, symbol });
        }
        self.prev = Some(symbol);
        Ok(Some(Run { symbol, len }))
    }
}

impl<R: Read> Iterator for RleReader<R> {
    type Item = Result<Run, DecodeError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        match self.read_record() {
            Ok(Some(run)) => Some(Ok(run)),
            Ok(None) => {
                self.done = true;
                None
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

/// Decodes an `RLE1` stream and returns the number of bytes written.
pub fn decode_stream<R: Read, W: Write>(input: R, mut output: W) -> Result<u64, DecodeError> {
    let mut chunk = [0u8; 8192];
    let mut written = 0u64;
    for run in RleReader::new(input)? {
        let run = run?;
        chunk.fill(run.symbol);
        let mut left = run.len;
        while left > 0 {
            let n = left.min(chunk.len());
            output.write_all(&chunk[..n])?;
            left -= n;
        }
        written += run.len as u64;
    }
    output.flush()?;
    Ok(written)
}

/// Decodes an `RLE1` buffer into memory.
pub fn decode_to_vec(encoded: &[u8]) -> Result<Vec<u8>, DecodeError> {
    let mut out = Vec::new();
    decode_stream(encoded, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pairs(runs: impl Iterator<Item = Run>) -> Vec<(u8, usize)> {
        runs.map(|r| (r.symbol, r.len)).collect()
    }

    #[test]
    fn runs_of_examples() {
        assert_eq!(
            pairs(runs_of(b"cttcct")),
            vec![(b'c', 1), (b't', 2), (b'c', 2), (b't', 1)]
        );
        assert_eq!(
            pairs(runs_of(b"cttccttcct")),
            vec![(b'c', 1), (b't', 2), (b'c', 2), (b't', 2), (b'c', 2), (b't', 1)]
        );
        assert_eq!(runs_of(b"").count(), 0);
    }

    #[test]
    fn alpha_tables_from_worked_example() {
        let p = RunSeq::from_bytes(b"cttcct");
        let alphas: Vec<_> = (0..=p.len()).map(|i| p.coords(i).unwrap().alpha).collect();
        assert_eq!(alphas, vec![0, 1, 3, 5, 6]);
        let s = RunSeq::from_bytes(b"cttccttcct");
        let alphas: Vec<_> = (0..=s.len()).map(|i| s.coords(i).unwrap().alpha).collect();
        assert_eq!(alphas, vec![0, 1, 3, 5, 7, 9, 10]);
    }

    #[test]
    fn coords() {
        let p = RunSeq::from_bytes(b"cttcct");
        let c = p.coords(2).unwrap();
        assert_eq!((c.alpha, c.beta(), c.ell), (3, Some(4), 2));
        assert_eq!(p.coords(0).unwrap().alpha, 0);
        let end = p.coords(4).unwrap();
        assert_eq!((end.alpha, end.beta(), end.ell), (6, None, 0));
        assert!(matches!(p.coords(5), Err(Error::RunIndexOutOfRange { index: 5, runs: 4 })));
        assert_eq!(p.run_at(0), Some(0));
        assert_eq!(p.run_at(4), Some(2));
        assert_eq!(p.run_at(5), Some(3));
        assert_eq!(p.run_at(6), None);
    }

    #[test]
    fn from_runs_validates() {
        assert!(RunSeq::from_runs(vec![Run::new(b'a', 1), Run::new(b'a', 2)]).is_err());
        assert!(RunSeq::from_runs(vec![Run { symbol: b'a', len: 0 }]).is_err());
        let rs = RunSeq::from_runs(vec![Run::new(b'a', 3), Run::new(b'b', 1)]).unwrap();
        assert_eq!(rs.to_bytes(), b"aaab");
    }

    #[test]
    fn reversed_window_examples() {
        let t = b"cttccttcct";
        assert_eq!(
            pairs(runs_of_reversed_window(t, 0, 6).unwrap()),
            vec![(b't', 2), (b'c', 2), (b't', 2), (b'c', 1)]
        );
        assert_eq!(pairs(runs_of_reversed_window(t, 3, 3).unwrap()), vec![(b'c', 1)]);
        assert_eq!(
            pairs(runs_of_reversed_window(t, 4, 9).unwrap()),
            vec![(b't', 1), (b'c', 2), (b't', 2), (b'c', 1)]
        );
        assert!(runs_of_reversed_window(t, 5, 4).is_err());
        assert!(runs_of_reversed_window(t, 0, 10).is_err());
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_to_vec(b""), b"RLE1");
        assert_eq!(encode_to_vec(b"cttcct"), b"RLE1c\x01t\x02c\x02t\x01");
        let long = vec![b'x'; 300];
        // 300 = 0b10_0101100 -> 0xac 0x02
        assert_eq!(encode_to_vec(&long), b"RLE1x\xac\x02");
    }

    #[test]
    fn encoder_merges_across_writes() {
        let mut enc = RleEncoder::new(Vec::new()).unwrap();
        enc.write_all(b"aab").unwrap();
        enc.write_all(b"bbc").unwrap();
        let out = enc.finish().unwrap();
        assert_eq!(out, b"RLE1a\x02b\x03c\x01");
    }

    #[test]
    fn decode_errors() {
        let code = |bytes: &[u8]| decode_to_vec(bytes).unwrap_err().code();
        assert_eq!(code(b""), "bad-magic");
        assert_eq!(code(b"RLE"), "bad-magic");
        assert_eq!(code(b"RLE2a\x01"), "bad-magic");
        assert_eq!(code(b"RLE1a"), "truncated-varint");
        assert_eq!(code(b"RLE1a\x81"), "truncated-varint");
        assert_eq!(code(b"RLE1a\x00"), "zero-length-run");
        assert_eq!(code(b"RLE1a\x01a\x02"), "adjacent-equal-symbols");
        assert_eq!(code(b"RLE1a\xff\xff\xff\xff\xff\xff\xff\xff\xff\x7f"), "length-overflow");
        assert_eq!(code(b"RLE1a\x80\x80\x80\x80\x80\x80\x80\x80\x80\x80\x01"), "length-overflow");
        assert_eq!(decode_to_vec(b"RLE1").unwrap(), b"");
    }

    #[test]
    fn decode_max_length_varint_is_accepted_by_reader() {
        let mut bytes = b"RLE1a".to_vec();
        write_uleb128(&mut bytes, u64::MAX).unwrap();
        let runs: Vec<_> = RleReader::new(&bytes[..]).unwrap().collect();
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].as_ref().unwrap().len as u64, u64::MAX);
    }

    proptest! {
        #[test]
        fn runs_reconstruct(text in proptest::collection::vec(0u8..4, 0..300)) {
            let runs: Vec<Run> = runs_of(&text).collect();
            prop_assert_eq!(runs.iter().map(|r| r.len).sum::<usize>(), text.len());
            prop_assert!(runs.windows(2).all(|w| w[0].symbol != w[1].symbol));
            prop_assert_eq!(RunSeq::from_runs(runs).unwrap().to_bytes(), text);
        }

        #[test]
        fn reversed_window_matches_naive(
            text in proptest::collection::vec(0u8..3, 1..200),
            a in any::<prop::sample::Index>(),
            b in any::<prop::sample::Index>(),
        ) {
            let (x, y) = (a.index(text.len()), b.index(text.len()));
            let (begin, end) = (x.min(y), x.max(y));
            let mut rev = text[begin..=end].to_vec();
            rev.reverse();
            let want: Vec<Run> = runs_of(&rev).collect();
            let got: Vec<Run> = runs_of_reversed_window(&text, begin, end).unwrap().collect();
            prop_assert_eq!(got, want);
        }

        #[test]
        fn codec_round_trip(text in proptest::collection::vec(0u8..3, 0..2000)) {
            let enc = encode_to_vec(&text);
            prop_assert_eq!(decode_to_vec(&enc).unwrap(), text);
        }
    }
}
