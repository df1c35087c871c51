use std::io;

use crate::rle::DecodeError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("bit vector width must be at least 1")]
    ZeroWidth,
    #[error("pattern is empty")]
    EmptyPattern,
    #[error("pattern consists of a single run; use the single-symbol matcher")]
    SingleRunPattern,
    #[error("input is empty")]
    EmptyInput,
    #[error("invalid run sequence: {0}")]
    InvalidRunSeq(&'static str),
    #[error("run index {index} out of range (run count {runs})")]
    RunIndexOutOfRange { index: usize, runs: usize },
    #[error("window [{begin}, {end}] out of range for text of length {len}")]
    WindowOutOfRange { begin: usize, end: usize, len: usize },
    #[error("algorithm {0} needs random access to the text and cannot read a run-length encoded stream")]
    IncompatibleSource(&'static str),
    #[error("invalid generator parameters: {0}")]
    InvalidGenSpec(String),
    #[error("matchers disagree on {pattern_desc}: {first} found {first_count} matches, {second} found {second_count}")]
    Disagreement {
        pattern_desc: String,
        first: &'static str,
        first_count: usize,
        second: &'static str,
        second_count: usize,
    },
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error(transparent)]
    Io(#[from] io::Error),
}
