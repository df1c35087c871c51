//! Search algorithms.
//!
//! Every matcher reports 0-based occurrence *start* positions in a
//! [`MatchSet`].
//!
//! * [`RlShiftAnd`] simulates the prefix automaton one text run per step.
//! * [`RlBndm`] scans windows backward with the run-boundary suffix automaton
//!   of the reversed pattern, extending each window to the end of the run it
//!   stops in.
//! * [`suffix_prefix_lengths`] runs the suffix automaton over a string.
//! * [`single_symbol_match`] handles patterns made of one repeated byte.
//! * [`ShiftAnd`], [`Bndm`] and [`naive_search`] are symbol-at-a-time
//!   baselines.
//!
//! [`search`] picks one of them for a pattern and a text source.

use std::convert::Infallible;
use std::fmt;
use std::io::Read;

use crate::bitvec::{BitVec, Fill, OneWord, Register, WORD_BITS};
use crate::error::{Error, Result};
use crate::rle::{runs_of, ReversedRuns, RleReader, Run};
use crate::tables::{PatternTables, SuffixTables};

/// Sorted, deduplicated occurrence start positions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MatchSet(Vec<usize>);

impl MatchSet {
    pub fn from_unsorted(mut starts: Vec<usize>) -> MatchSet {
        starts.sort_unstable();
        starts.dedup();
        MatchSet(starts)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl From<MatchSet> for Vec<usize> {
    fn from(m: MatchSet) -> Vec<usize> {
        m.0
    }
}

impl<'a> IntoIterator for &'a MatchSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Work counters collected during a search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Automaton transitions, or symbol comparisons for [`naive_search`].
    pub transitions: u64,
}

// MultiWord forces the general path; tests compare it with the one-word path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Engine {
    Auto,
    #[cfg_attr(not(test), allow(dead_code))]
    MultiWord,
}

type Observer<'a> = &'a mut dyn FnMut(&BitVec);

fn infallible<I: IntoIterator<Item = Run>>(runs: I) -> impl Iterator<Item = Result<Run, Infallible>> {
    runs.into_iter().map(Ok)
}

fn unwrap_infallible<T>(r: Result<T, Infallible>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => match e {},
    }
}

/// Shift-And over the run-length encoding of the text.
///
/// One transition per text run:
/// `D = ((D << 1) | 1) & b1[c] & b2[min(l, m + 1)]`. When the bit of the last
/// pattern run is set after a run starting at `j`, the occurrence ends
/// inside that run and starts at `j + ell - m`, where `ell` is the length of
/// the pattern's last run.
#[derive(Clone, Debug)]
pub struct RlShiftAnd {
    tables: PatternTables,
}

impl RlShiftAnd {
    pub fn new(pattern: &[u8]) -> Result<RlShiftAnd> {
        Ok(RlShiftAnd { tables: PatternTables::new(pattern)? })
    }

    pub fn from_tables(tables: PatternTables) -> RlShiftAnd {
        RlShiftAnd { tables }
    }

    pub fn tables(&self) -> &PatternTables {
        &self.tables
    }

    pub fn find(&self, text: &[u8]) -> MatchSet {
        self.find_runs(runs_of(text))
    }

    pub fn find_runs<I: IntoIterator<Item = Run>>(&self, runs: I) -> MatchSet {
        unwrap_infallible(self.try_find_runs(infallible(runs)))
    }

    /// Searches a fallible run stream, such as an [`RleReader`].
    pub fn try_find_runs<I, E>(&self, runs: I) -> Result<MatchSet, E>
    where
        I: IntoIterator<Item = Result<Run, E>>,
    {
        self.scan(runs.into_iter(), Engine::Auto, None).map(|(m, _)| m)
    }

    pub fn find_with_stats(&self, text: &[u8]) -> (MatchSet, SearchStats) {
        unwrap_infallible(self.scan(infallible(runs_of(text)), Engine::Auto, None))
    }

    /// Configuration after each text run, i.e. the sets of active run-end
    /// states `D_1, D_2, ...`.
    pub fn trace<I: IntoIterator<Item = Run>>(&self, runs: I) -> Vec<BitVec> {
        let mut out = Vec::new();
        let mut push = |d: &BitVec| out.push(d.clone());
        unwrap_infallible(self.scan(infallible(runs), Engine::Auto, Some(&mut push)));
        out
    }

    fn scan<I, E>(&self, runs: I, engine: Engine, observe: Option<Observer<'_>>) -> Result<(MatchSet, SearchStats), E>
    where
        I: Iterator<Item = Result<Run, E>>,
    {
        if engine == Engine::Auto && self.tables.rho() <= WORD_BITS {
            self.scan_with::<OneWord, _, _>(runs, observe)
        } else {
            self.scan_with::<BitVec, _, _>(runs, observe)
        }
    }

    fn scan_with<R, I, E>(&self, runs: I, mut observe: Option<Observer<'_>>) -> Result<(MatchSet, SearchStats), E>
    where
        R: Register,
        I: Iterator<Item = Result<Run, E>>,
    {
        let t = &self.tables;
        let (m, ell) = (t.m(), t.last_run_len());
        let mut d = R::filled(t.rho(), Fill::Zeros);
        let mut starts = Vec::new();
        let mut stats = SearchStats::default();
        let mut j = 0usize;
        for run in runs {
            let Run { symbol, len } = run?;
            d.shl1_assign(true);
            d.and_row(t.b1(symbol));
            d.and_row(t.b2(len));
            stats.transitions += 1;
            if let Some(f) = observe.as_mut() {
                f(&d.to_bitvec());
            }
            if d.high() {
                starts.push(j + ell - m);
            }
            j += len;
        }
        Ok((MatchSet::from_unsorted(starts), stats))
    }
}

/// BNDM over run-length encoded windows.
///
/// Built from the reversed pattern. Each window ending at `s` is first
/// extended to the end of the text run containing `s`; at most one
/// occurrence can end in that stretch. The window is then read backward run
/// by run with `D = D & b1[c] & b2[min(l, m + 1)]`, starting from all ones.
#[derive(Clone, Debug)]
pub struct RlBndm {
    tables: PatternTables,
}

impl RlBndm {
    pub fn new(pattern: &[u8]) -> Result<RlBndm> {
        let reversed: Vec<u8> = pattern.iter().rev().copied().collect();
        Ok(RlBndm { tables: PatternTables::new(&reversed)? })
    }

    /// Tables of the reversed pattern.
    pub fn tables(&self) -> &PatternTables {
        &self.tables
    }

    pub fn find(&self, text: &[u8]) -> MatchSet {
        self.find_with_stats(text).0
    }

    pub fn find_with_stats(&self, text: &[u8]) -> (MatchSet, SearchStats) {
        self.find_engine(text, Engine::Auto)
    }

    /// Like [`RlBndm::find`], also returning each window as `(begin, end)`
    /// after extension to the end of its last run.
    pub fn find_with_windows(&self, text: &[u8]) -> (MatchSet, Vec<(usize, usize)>) {
        let mut windows = Vec::new();
        let (found, _) = self.dispatch(text, Engine::Auto, Some(&mut windows));
        (found, windows)
    }

    fn find_engine(&self, text: &[u8], engine: Engine) -> (MatchSet, SearchStats) {
        self.dispatch(text, engine, None)
    }

    fn dispatch(
        &self,
        text: &[u8],
        engine: Engine,
        windows: Option<&mut Vec<(usize, usize)>>,
    ) -> (MatchSet, SearchStats) {
        if engine == Engine::Auto && self.tables.rho() <= WORD_BITS {
            self.scan_with::<OneWord>(text, windows)
        } else {
            self.scan_with::<BitVec>(text, windows)
        }
    }

    fn scan_with<R: Register>(
        &self,
        text: &[u8],
        mut windows: Option<&mut Vec<(usize, usize)>>,
    ) -> (MatchSet, SearchStats) {
        let t = &self.tables;
        let (m, ell, n) = (t.m(), t.last_run_len(), text.len());
        let mut starts = Vec::new();
        let mut stats = SearchStats::default();
        if n < m {
            return (MatchSet::default(), stats);
        }
        let full = R::filled(t.rho(), Fill::Ones);
        let mut s = m - 1;
        while s < n {
            let b = s + 1 - m;
            while s + 1 < n && text[s] == text[s + 1] {
                s += 1;
            }
            if let Some(w) = windows.as_mut() {
                w.push((b, s));
            }
            let mut d = full.clone();
            let mut j = 0usize;
            let mut k = 1usize;
            for Run { symbol, len } in ReversedRuns::new_unchecked(text, b, s) {
                d.and_row(t.b1(symbol));
                d.and_row(t.b2(len));
                stats.transitions += 1;
                if d.high() {
                    if j + ell >= m {
                        starts.push(s + 1 - j - ell);
                    } else {
                        k = j + ell;
                    }
                }
                d.shl1_assign(false);
                if d.zero() {
                    break;
                }
                j += len;
            }
            s += m - k;
        }
        (MatchSet::from_unsorted(starts), stats)
    }
}

/// Lengths `L >= 1` such that `s[..L]` is a suffix of the pattern, in
/// ascending order.
///
/// The first run of `s` is handled directly: if its symbol is the last
/// symbol of the pattern, every length up to `min(run length, last pattern
/// run length)` qualifies. Later runs go through the suffix automaton, where
/// reaching the final state after a run starting at `j` yields `j + ell`.
pub fn suffix_prefix_lengths(tables: &SuffixTables, s: &[u8]) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(if tables.rho() <= WORD_BITS {
        suffix_scan::<OneWord>(tables, s)
    } else {
        suffix_scan::<BitVec>(tables, s)
    })
}

fn suffix_scan<R: Register>(t: &SuffixTables, s: &[u8]) -> Vec<usize> {
    let ell = t.last_run_len();
    let last_symbol = t.pattern_runs().runs()[t.rho() - 1].symbol;
    let mut runs = runs_of(s);
    let first = runs.next().expect("nonempty input");
    let mut out = Vec::new();
    if first.symbol == last_symbol {
        out.extend(1..=first.len.min(ell));
    }
    let mut d = R::filled(t.rho(), Fill::Ones);
    d.and_row(t.b1(first.symbol));
    d.and_row(t.b3(first.len));
    let mut j = first.len;
    for Run { symbol, len } in runs {
        d.shl1_assign(false);
        if d.zero() {
            break;
        }
        d.and_row(t.b1(symbol));
        d.and_row(t.b2s(len));
        if d.high() {
            out.push(j + ell);
        }
        j += len;
    }
    out
}

/// Matcher for patterns consisting of `m` copies of `symbol`.
pub fn single_symbol_match<I: IntoIterator<Item = Run>>(symbol: u8, m: usize, runs: I) -> MatchSet {
    unwrap_infallible(try_single_symbol_match(symbol, m, infallible(runs))).0
}

fn try_single_symbol_match<I, E>(symbol: u8, m: usize, runs: I) -> Result<(MatchSet, SearchStats), E>
where
    I: IntoIterator<Item = Result<Run, E>>,
{
    assert!(m >= 1, "pattern length must be at least 1");
    let mut starts = Vec::new();
    let mut stats = SearchStats::default();
    let mut alpha = 0usize;
    for run in runs {
        let run = run?;
        stats.transitions += 1;
        if run.symbol == symbol && run.len >= m {
            starts.extend(alpha..=alpha + run.len - m);
        }
        alpha += run.len;
    }
    Ok((MatchSet(starts), stats))
}

fn symbol_masks(width: usize, bytes: impl Iterator<Item = u8>) -> Vec<BitVec> {
    let mut masks = vec![BitVec::zeros(width); 256];
    for (i, c) in bytes.enumerate() {
        masks[c as usize].set(i);
    }
    masks
}

/// Classic Shift-And with an `m`-bit configuration.
#[derive(Clone, Debug)]
pub struct ShiftAnd {
    masks: Vec<BitVec>,
    m: usize,
}

impl ShiftAnd {
    pub fn new(pattern: &[u8]) -> Result<ShiftAnd> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let m = pattern.len();
        Ok(ShiftAnd { masks: symbol_masks(m, pattern.iter().copied()), m })
    }

    pub fn find(&self, text: &[u8]) -> MatchSet {
        self.find_with_stats(text).0
    }

    pub fn find_with_stats(&self, text: &[u8]) -> (MatchSet, SearchStats) {
        let runs = text.iter().map(|&c| Ok::<_, Infallible>(Run { symbol: c, len: 1 }));
        unwrap_infallible(self.scan(runs, Engine::Auto))
    }

    /// Searches a decoded run stream, one transition per symbol.
    pub fn try_find_runs<I, E>(&self, runs: I) -> Result<MatchSet, E>
    where
        I: IntoIterator<Item = Result<Run, E>>,
    {
        self.scan(runs.into_iter(), Engine::Auto).map(|(m, _)| m)
    }

    fn scan<I, E>(&self, runs: I, engine: Engine) -> Result<(MatchSet, SearchStats), E>
    where
        I: Iterator<Item = Result<Run, E>>,
    {
        if engine == Engine::Auto && self.m <= WORD_BITS {
            self.scan_with::<OneWord, _, _>(runs)
        } else {
            self.scan_with::<BitVec, _, _>(runs)
        }
    }

    fn scan_with<R: Register, I, E>(&self, runs: I) -> Result<(MatchSet, SearchStats), E>
    where
        I: Iterator<Item = Result<Run, E>>,
    {
        let m = self.m;
        let mut d = R::filled(m, Fill::Zeros);
        let mut starts = Vec::new();
        let mut stats = SearchStats::default();
        let mut pos = 0usize;
        for run in runs {
            let Run { symbol, len } = run?;
            let mask = &self.masks[symbol as usize];
            for _ in 0..len {
                d.shl1_assign(true);
                d.and_row(mask);
                stats.transitions += 1;
                if d.high() {
                    starts.push(pos + 1 - m);
                }
                pos += 1;
            }
        }
        Ok((MatchSet(starts), stats))
    }
}

/// Classic BNDM with an `m`-bit configuration.
#[derive(Clone, Debug)]
pub struct Bndm {
    masks: Vec<BitVec>,
    m: usize,
}

impl Bndm {
    pub fn new(pattern: &[u8]) -> Result<Bndm> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let m = pattern.len();
        Ok(Bndm { masks: symbol_masks(m, pattern.iter().rev().copied()), m })
    }

    pub fn find(&self, text: &[u8]) -> MatchSet {
        self.find_with_stats(text).0
    }

    pub fn find_with_stats(&self, text: &[u8]) -> (MatchSet, SearchStats) {
        self.find_engine(text, Engine::Auto)
    }

    fn find_engine(&self, text: &[u8], engine: Engine) -> (MatchSet, SearchStats) {
        if engine == Engine::Auto && self.m <= WORD_BITS {
            self.scan_with::<OneWord>(text)
        } else {
            self.scan_with::<BitVec>(text)
        }
    }

    fn scan_with<R: Register>(&self, text: &[u8]) -> (MatchSet, SearchStats) {
        let m = self.m;
        let mut starts = Vec::new();
        let mut stats = SearchStats::default();
        let full = R::filled(m, Fill::Ones);
        let mut pos = 0usize;
        while pos + m <= text.len() {
            let mut d = full.clone();
            let mut j = m;
            // window start plus the shift that aligns the longest prefix seen
            let mut shift = m;
            loop {
                j -= 1;
                d.and_row(&self.masks[text[pos + j] as usize]);
                stats.transitions += 1;
                if d.high() {
                    if j == 0 {
                        starts.push(pos);
                        break;
                    }
                    shift = j;
                }
                if j == 0 {
                    break;
                }
                d.shl1_assign(false);
                if d.zero() {
                    break;
                }
            }
            pos += shift;
        }
        (MatchSet(starts), stats)
    }
}

/// Position-by-position comparison. The reference every other matcher is
/// tested against.
pub fn naive_search(pattern: &[u8], text: &[u8]) -> Result<MatchSet> {
    Ok(naive_search_with_stats(pattern, text)?.0)
}

pub fn naive_search_with_stats(pattern: &[u8], text: &[u8]) -> Result<(MatchSet, SearchStats)> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let mut stats = SearchStats::default();
    let starts = text
        .windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| {
            let mut eq = true;
            for (a, b) in w.iter().zip(pattern) {
                stats.transitions += 1;
                if a != b {
                    eq = false;
                    break;
                }
            }
            eq
        })
        .map(|(i, _)| i)
        .collect();
    Ok((MatchSet(starts), stats))
}

/// Algorithm selector for [`search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Algorithm {
    Auto,
    #[value(name = "rl-shift-and")]
    RlShiftAnd,
    #[value(name = "rl-bndm")]
    RlBndm,
    #[value(name = "shift-and")]
    ShiftAnd,
    Bndm,
    Naive,
}

impl Algorithm {
    pub const EXPLICIT: [Algorithm; 5] = [
        Algorithm::RlShiftAnd,
        Algorithm::RlBndm,
        Algorithm::ShiftAnd,
        Algorithm::Bndm,
        Algorithm::Naive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::RlShiftAnd => "rl-shift-and",
            Algorithm::RlBndm => "rl-bndm",
            Algorithm::ShiftAnd => "shift-and",
            Algorithm::Bndm => "bndm",
            Algorithm::Naive => "naive",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The matcher [`search`] actually runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Matcher {
    SingleSymbol,
    RlShiftAnd,
    RlBndm,
    ShiftAnd,
    Bndm,
    Naive,
}

impl Matcher {
    pub fn name(self) -> &'static str {
        match self {
            Matcher::SingleSymbol => "single-symbol",
            Matcher::RlShiftAnd => "rl-shift-and",
            Matcher::RlBndm => "rl-bndm",
            Matcher::ShiftAnd => "shift-and",
            Matcher::Bndm => "bndm",
            Matcher::Naive => "naive",
        }
    }
}

/// Where the text comes from.
pub enum TextSource<'a> {
    /// Unencoded text in memory.
    Raw(&'a [u8]),
    /// An `RLE1` stream, read once front to back.
    Rle(&'a mut dyn Read),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceKind {
    Raw,
    RleStream,
}

impl TextSource<'_> {
    pub fn kind(&self) -> SourceKind {
        match self {
            TextSource::Raw(_) => SourceKind::Raw,
            TextSource::Rle(_) => SourceKind::RleStream,
        }
    }
}

/// Resolves `algorithm` to a concrete matcher for `pattern` and a source.
///
/// `Auto` chooses the single-symbol matcher for one-run patterns, RL
/// Shift-And for encoded streams, RL BNDM for raw text when the pattern has
/// at most 64 runs, and classic Shift-And otherwise. The run-length
/// algorithms fall back to the single-symbol matcher for one-run patterns.
/// Algorithms that need random access are rejected for encoded streams.
pub fn plan(pattern: &[u8], source: SourceKind, algorithm: Algorithm) -> Result<Matcher> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let rho = runs_of(pattern).take(WORD_BITS + 1).count();
    let single = rho == 1;
    let chosen = match algorithm {
        Algorithm::Auto if single => Matcher::SingleSymbol,
        Algorithm::Auto => match source {
            SourceKind::RleStream => Matcher::RlShiftAnd,
            SourceKind::Raw if rho <= WORD_BITS => Matcher::RlBndm,
            SourceKind::Raw => Matcher::ShiftAnd,
        },
        Algorithm::RlShiftAnd | Algorithm::RlBndm if single => Matcher::SingleSymbol,
        Algorithm::RlShiftAnd => Matcher::RlShiftAnd,
        Algorithm::RlBndm => Matcher::RlBndm,
        Algorithm::ShiftAnd => Matcher::ShiftAnd,
        Algorithm::Bndm => Matcher::Bndm,
        Algorithm::Naive => Matcher::Naive,
    };
    if source == SourceKind::RleStream
        && matches!(chosen, Matcher::RlBndm | Matcher::Bndm | Matcher::Naive)
    {
        return Err(Error::IncompatibleSource(chosen.name()));
    }
    Ok(chosen)
}

/// Finds every occurrence of `pattern` in `source`.
pub fn search(pattern: &[u8], source: TextSource<'_>, algorithm: Algorithm) -> Result<MatchSet> {
    let matcher = plan(pattern, source.kind(), algorithm)?;
    let m = pattern.len();
    match source {
        TextSource::Raw(text) => Ok(match matcher {
            Matcher::SingleSymbol => single_symbol_match(pattern[0], m, runs_of(text)),
            Matcher::RlShiftAnd => RlShiftAnd::new(pattern)?.find(text),
            Matcher::RlBndm => RlBndm::new(pattern)?.find(text),
            Matcher::ShiftAnd => ShiftAnd::new(pattern)?.find(text),
            Matcher::Bndm => Bndm::new(pattern)?.find(text),
            Matcher::Naive => naive_search(pattern, text)?,
        }),
        TextSource::Rle(reader) => {
            let runs = RleReader::new(reader)?;
            Ok(match matcher {
                Matcher::SingleSymbol => try_single_symbol_match(pattern[0], m, runs)?.0,
                Matcher::RlShiftAnd => RlShiftAnd::new(pattern)?.try_find_runs(runs)?,
                Matcher::ShiftAnd => ShiftAnd::new(pattern)?.try_find_runs(runs)?,
                Matcher::RlBndm | Matcher::Bndm | Matcher::Naive => {
                    unreachable!("rejected by plan")
                }
            })
        }
    }
}

/// A matcher with its preprocessing done, ready to scan raw text.
#[derive(Clone, Debug)]
pub enum PreparedMatcher {
    SingleSymbol { symbol: u8, m: usize },
    RlShiftAnd(RlShiftAnd),
    RlBndm(RlBndm),
    ShiftAnd(ShiftAnd),
    Bndm(Bndm),
    Naive(Vec<u8>),
}

impl PreparedMatcher {
    pub fn new(pattern: &[u8], matcher: Matcher) -> Result<PreparedMatcher> {
        Ok(match matcher {
            Matcher::SingleSymbol => {
                let &symbol = pattern.first().ok_or(Error::EmptyPattern)?;
                if pattern.iter().any(|&c| c != symbol) {
                    return Err(Error::InvalidRunSeq("pattern has more than one run"));
                }
                PreparedMatcher::SingleSymbol { symbol, m: pattern.len() }
            }
            Matcher::RlShiftAnd => PreparedMatcher::RlShiftAnd(RlShiftAnd::new(pattern)?),
            Matcher::RlBndm => PreparedMatcher::RlBndm(RlBndm::new(pattern)?),
            Matcher::ShiftAnd => PreparedMatcher::ShiftAnd(ShiftAnd::new(pattern)?),
            Matcher::Bndm => PreparedMatcher::Bndm(Bndm::new(pattern)?),
            Matcher::Naive => {
                if pattern.is_empty() {
                    return Err(Error::EmptyPattern);
                }
                PreparedMatcher::Naive(pattern.to_vec())
            }
        })
    }

    pub fn matcher(&self) -> Matcher {
        match self {
            PreparedMatcher::SingleSymbol { .. } => Matcher::SingleSymbol,
            PreparedMatcher::RlShiftAnd(_) => Matcher::RlShiftAnd,
            PreparedMatcher::RlBndm(_) => Matcher::RlBndm,
            PreparedMatcher::ShiftAnd(_) => Matcher::ShiftAnd,
            PreparedMatcher::Bndm(_) => Matcher::Bndm,
            PreparedMatcher::Naive(_) => Matcher::Naive,
        }
    }

    pub fn find_with_stats(&self, text: &[u8]) -> (MatchSet, SearchStats) {
        match self {
            PreparedMatcher::SingleSymbol { symbol, m } => {
                unwrap_infallible(try_single_symbol_match(*symbol, *m, infallible(runs_of(text))))
            }
            PreparedMatcher::RlShiftAnd(x) => x.find_with_stats(text),
            PreparedMatcher::RlBndm(x) => x.find_with_stats(text),
            PreparedMatcher::ShiftAnd(x) => x.find_with_stats(text),
            PreparedMatcher::Bndm(x) => x.find_with_stats(text),
            PreparedMatcher::Naive(p) => naive_search_with_stats(p, text).expect("pattern checked at construction"),
        }
    }
}
