//! Exact string matching over run-length encoded text.
//!
//! The searchers in this crate simulate the nondeterministic prefix (KMP)
//! automaton and suffix automaton of a pattern one *run* at a time instead of
//! one symbol at a time. A configuration only tracks the states that sit on a
//! run boundary of the pattern, so it fits in `ceil(rho / 64)` machine words
//! where `rho` is the number of runs of the pattern, and a text with long runs
//! is consumed in `|rle(T)|` transitions.
//!
//! ```
//! use rlmatch::matchers::{naive_search, RlBndm, RlShiftAnd};
//!
//! let text = b"cttccttcct";
//! let shift_and = RlShiftAnd::new(b"cttcct").unwrap();
//! let bndm = RlBndm::new(b"cttcct").unwrap();
//! assert_eq!(shift_and.find(text).as_slice(), &[0, 4]);
//! assert_eq!(bndm.find(text), naive_search(b"cttcct", text).unwrap());
//! ```
//!
//! Modules:
//!
//! * [`bitvec`]: fixed-width multi-word bit vectors used for configurations
//!   and table rows.
//! * [`rle`]: run iteration, run coordinates and the `RLE1` file codec.
//! * [`tables`]: pattern preprocessing.
//! * [`matchers`]: run-length and classic bit-parallel searchers, the naive
//!   oracle and the [`search`](matchers::search) dispatcher.
//! * [`bench`]: synthetic text generation and a timing harness.
//! * [`cli`]: the command line front end behind the `rlmatch` binary.

pub mod bench;
pub mod bitvec;
pub mod cli;
mod error;
pub mod matchers;
pub mod rle;
pub mod tables;

pub use crate::bitvec::{BitVec, Fill};
pub use crate::error::{Error, Result};
pub use crate::matchers::{search, Algorithm, MatchSet, TextSource};
pub use crate::rle::{Run, RunSeq};
pub use crate::tables::{PatternTables, SuffixTables};
