//! Pattern preprocessing.
//!
//! Bit `i - 1` of every row stands for the `i`-th run of the pattern
//! (1-based), i.e. for the automaton state at the end of that run.
//!
//! * `b1[c]`: runs whose symbol is `c`.
//! * `b2[l]`: runs of length exactly `l`, plus the first and last run when
//!   their length is at most `l`.
//! * `b2s[l]`: like `b2` but only the last run gets the "at most" rule.
//! * `b3[l]`: runs of length at least `l`, plus the last run always.
//!
//! Length-indexed rows exist for `1..=m+1`; any longer run is looked up as
//! `m + 1`.

use crate::bitvec::{words_for, BitVec};
use crate::error::{Error, Result};
use crate::rle::{runs_of, RunSeq};

const SIGMA: usize = 256;

fn check_pattern(pattern: &[u8]) -> Result<RunSeq> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let runs = RunSeq::from_bytes(pattern);
    if runs.len() < 2 {
        return Err(Error::SingleRunPattern);
    }
    Ok(runs)
}

fn symbol_rows(pattern: &[u8], rho: usize) -> Vec<BitVec> {
    let mut b1 = vec![BitVec::zeros(rho); SIGMA];
    for (i, run) in runs_of(pattern).enumerate() {
        b1[run.symbol as usize].set(i);
    }
    b1
}

#[inline]
fn clamp(l: usize, m: usize) -> usize {
    assert!(l >= 1, "run length must be at least 1");
    l.min(m + 1)
}

/// Tables for the prefix automaton (and, built from the reversed pattern,
/// for the run-boundary suffix automaton used by [`RlBndm`]).
///
/// [`RlBndm`]: crate::matchers::RlBndm
#[derive(Clone, Debug)]
pub struct PatternTables {
    b1: Vec<BitVec>,
    // b2[l - 1] for l in 1..=m + 1
    b2: Vec<BitVec>,
    rho: usize,
    ell: usize,
    m: usize,
    runs: RunSeq,
}

impl PatternTables {
    /// Fails on an empty pattern and on a pattern made of a single run.
    pub fn new(pattern: &[u8]) -> Result<PatternTables> {
        let runs = check_pattern(pattern)?;
        let rho = runs.len();
        let m = pattern.len();
        let b1 = symbol_rows(pattern, rho);
        let mut b2 = vec![BitVec::zeros(rho); m + 1];
        let mut ell = 0;
        for (i, run) in runs_of(pattern).enumerate() {
            if i == 0 || i == rho - 1 {
                ell = run.len;
                for row in &mut b2[run.len - 1..] {
                    row.set(i);
                }
            } else {
                b2[run.len - 1].set(i);
            }
        }
        Ok(PatternTables { b1, b2, rho, ell, m, runs })
    }

    #[inline]
    pub fn b1(&self, symbol: u8) -> &BitVec {
        &self.b1[symbol as usize]
    }

    /// Row for run length `l`, clamped to `m + 1`. Panics if `l == 0`.
    #[inline]
    pub fn b2(&self, l: usize) -> &BitVec {
        &self.b2[clamp(l, self.m) - 1]
    }

    /// Number of runs of the pattern.
    pub fn rho(&self) -> usize {
        self.rho
    }

    /// Length of the last run of the pattern.
    pub fn last_run_len(&self) -> usize {
        self.ell
    }

    /// Pattern length.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn pattern_runs(&self) -> &RunSeq {
        &self.runs
    }

    pub fn words_per_row(&self) -> usize {
        words_for(self.rho)
    }

    /// Bytes used by the `b1` and `b2` rows.
    pub fn memory_bytes(&self) -> usize {
        (self.b1.len() + self.b2.len()) * self.words_per_row() * std::mem::size_of::<u64>()
    }
}

/// Tables for the suffix automaton of the pattern.
#[derive(Clone, Debug)]
pub struct SuffixTables {
    b1: Vec<BitVec>,
    b2s: Vec<BitVec>,
    b3: Vec<BitVec>,
    rho: usize,
    ell: usize,
    m: usize,
    runs: RunSeq,
}

impl SuffixTables {
    pub fn new(pattern: &[u8]) -> Result<SuffixTables> {
        let runs = check_pattern(pattern)?;
        let rho = runs.len();
        let m = pattern.len();
        let b1 = symbol_rows(pattern, rho);
        let mut b2s = vec![BitVec::zeros(rho); m + 1];
        let mut b3 = vec![BitVec::zeros(rho); m + 1];
        for (i, run) in runs_of(pattern).enumerate() {
            if i == rho - 1 {
                for row in &mut b2s[run.len - 1..] {
                    row.set(i);
                }
            } else {
                b2s[run.len - 1].set(i);
            }
            for row in &mut b3[..run.len] {
                row.set(i);
            }
        }
        for row in &mut b3 {
            row.set(rho - 1);
        }
        let ell = runs.runs()[rho - 1].len;
        Ok(SuffixTables { b1, b2s, b3, rho, ell, m, runs })
    }

    #[inline]
    pub fn b1(&self, symbol: u8) -> &BitVec {
        &self.b1[symbol as usize]
    }

    #[inline]
    pub fn b2s(&self, l: usize) -> &BitVec {
        &self.b2s[clamp(l, self.m) - 1]
    }

    #[inline]
    pub fn b3(&self, l: usize) -> &BitVec {
        &self.b3[clamp(l, self.m) - 1]
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn last_run_len(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn pattern_runs(&self) -> &RunSeq {
        &self.runs
    }

    pub fn words_per_row(&self) -> usize {
        words_for(self.rho)
    }
}
