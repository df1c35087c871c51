//! Synthetic texts and a timing harness.
//!
//! [`gen_text`] produces texts with a controlled run-length distribution.
//! [`run_benchmark`] times every requested algorithm on every (text, pattern)
//! pair, checking first that all of them report the same number of matches.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::{Distribution, Geometric};

use crate::error::{Error, Result};
use crate::matchers::{plan, Algorithm, PreparedMatcher, SourceKind};
use crate::rle::runs_of;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RunLengths {
    /// Run lengths `1 + Geometric(1 / mean)`, i.e. with the given mean.
    Geometric { mean: f64 },
    Fixed(usize),
}

/// Parameters of a generated text.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub alphabet_size: usize,
    pub length: usize,
    pub run_lengths: RunLengths,
    pub seed: u64,
}

impl GenSpec {
    pub fn geometric(alphabet_size: usize, length: usize, mean: f64, seed: u64) -> GenSpec {
        GenSpec { alphabet_size, length, run_lengths: RunLengths::Geometric { mean }, seed }
    }

    fn validate(&self) -> Result<()> {
        if !(2..=256).contains(&self.alphabet_size) {
            return Err(Error::InvalidGenSpec(format!(
                "alphabet size {} outside 2..=256 (adjacent runs need distinct symbols)",
                self.alphabet_size
            )));
        }
        match self.run_lengths {
            RunLengths::Geometric { mean } if !(mean.is_finite() && mean >= 1.0) => {
                Err(Error::InvalidGenSpec(format!("mean run length {mean} must be >= 1")))
            }
            RunLengths::Fixed(0) => Err(Error::InvalidGenSpec("fixed run length must be >= 1".into())),
            _ => Ok(()),
        }
    }

    /// Byte used for the `i`-th symbol: lowercase letters for alphabets of
    /// at most 26 symbols, raw byte values otherwise.
    pub fn symbol(&self, i: usize) -> u8 {
        if self.alphabet_size <= 26 {
            b'a' + i as u8
        } else {
            i as u8
        }
    }
}

/// Generates `spec.length` bytes. Deterministic for a fixed seed; adjacent
/// runs always have different symbols. The last run is cut at the length.
pub fn gen_text(spec: &GenSpec) -> Result<Vec<u8>> {
    spec.validate()?;
    let mut rng = StdRng::seed_from_u64(spec.seed);
    let geometric = match spec.run_lengths {
        RunLengths::Geometric { mean } => {
            Some(Geometric::new(1.0 / mean).map_err(|e| Error::InvalidGenSpec(e.to_string()))?)
        }
        RunLengths::Fixed(_) => None,
    };
    let sigma = spec.alphabet_size;
    let mut out = Vec::with_capacity(spec.length);
    let mut prev: Option<usize> = None;
    while out.len() < spec.length {
        let len = match (&geometric, spec.run_lengths) {
            (Some(g), _) => 1 + g.sample(&mut rng) as usize,
            (None, RunLengths::Fixed(l)) => l,
            (None, _) => unreachable!(),
        };
        let sym = match prev {
            None => rng.gen_range(0..sigma),
            Some(p) => {
                let x = rng.gen_range(0..sigma - 1);
                if x >= p {
                    x + 1
                } else {
                    x
                }
            }
        };
        prev = Some(sym);
        let len = len.min(spec.length - out.len());
        out.resize(out.len() + len, spec.symbol(sym));
    }
    Ok(out)
}

/// How patterns are chosen for each text.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PatternRule {
    /// Substrings of the text, so at least one match exists. With
    /// `max_runs`, only substrings with at most that many runs are taken.
    Substring { len: usize, count: usize, max_runs: Option<usize> },
    /// Uniform random strings over the text's alphabet.
    Random { len: usize, count: usize },
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub texts: Vec<GenSpec>,
    pub patterns: PatternRule,
    pub algorithms: Vec<Algorithm>,
    /// Timed searches per measurement; min and median are reported.
    pub repetitions: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            texts: vec![GenSpec::geometric(4, 1 << 20, 8.0, 42)],
            patterns: PatternRule::Substring { len: 64, count: 3, max_runs: None },
            algorithms: vec![
                Algorithm::RlShiftAnd,
                Algorithm::RlBndm,
                Algorithm::ShiftAnd,
                Algorithm::Bndm,
            ],
            repetitions: 3,
            seed: 7,
        }
    }
}

/// One measurement of one algorithm on one (text, pattern) pair.
#[derive(Clone, Debug)]
pub struct BenchReport {
    pub algorithm: &'static str,
    pub text_len: usize,
    pub text_runs: usize,
    pub pattern_len: usize,
    pub pattern_runs: usize,
    pub preprocess: Duration,
    pub search_min: Duration,
    pub search_median: Duration,
    pub transitions: u64,
    pub matches: usize,
}

impl BenchReport {
    /// Text bytes per second, from the fastest repetition.
    pub fn throughput(&self) -> f64 {
        self.text_len as f64 / self.search_min.as_secs_f64().max(1e-9)
    }
}

fn sample_patterns(rule: PatternRule, spec: &GenSpec, text: &[u8], rng: &mut StdRng) -> Result<Vec<Vec<u8>>> {
    match rule {
        PatternRule::Substring { len, count, max_runs } => {
            if len == 0 || len > text.len() {
                return Err(Error::InvalidGenSpec(format!(
                    "pattern length {len} not in 1..={}",
                    text.len()
                )));
            }
            let mut out = Vec::with_capacity(count);
            let mut attempts = 0usize;
            while out.len() < count {
                attempts += 1;
                if attempts > 10_000 * count.max(1) {
                    return Err(Error::InvalidGenSpec(format!(
                        "no substring of length {len} with at most {} runs found",
                        max_runs.unwrap_or(usize::MAX)
                    )));
                }
                let at = rng.gen_range(0..=text.len() - len);
                let p = &text[at..at + len];
                if max_runs.is_none_or(|r| runs_of(p).take(r + 1).count() <= r) {
                    out.push(p.to_vec());
                }
            }
            Ok(out)
        }
        PatternRule::Random { len, count } => {
            if len == 0 {
                return Err(Error::EmptyPattern);
            }
            Ok((0..count)
                .map(|_| (0..len).map(|_| spec.symbol(rng.gen_range(0..spec.alphabet_size))).collect())
                .collect())
        }
    }
}

/// Runs every algorithm on every (text, pattern) pair.
///
/// Fails with [`Error::Disagreement`] before reporting any timing for a pair
/// on which two algorithms report different match counts.
pub fn run_benchmark(config: &BenchConfig) -> Result<Vec<BenchReport>> {
    let reps = config.repetitions.max(1);
    let mut reports = Vec::new();
    for spec in &config.texts {
        let text = gen_text(spec)?;
        let text_runs = runs_of(&text).count();
        let mut rng = StdRng::seed_from_u64(config.seed ^ spec.seed.rotate_left(17));
        for pattern in sample_patterns(config.patterns, spec, &text, &mut rng)? {
            let pattern_runs = runs_of(&pattern).count();
            let mut pending: Vec<BenchReport> = Vec::with_capacity(config.algorithms.len());
            for &algorithm in &config.algorithms {
                let matcher = plan(&pattern, SourceKind::Raw, algorithm)?;
                let start = Instant::now();
                let prepared = PreparedMatcher::new(&pattern, matcher)?;
                let preprocess = start.elapsed();
                let mut times = Vec::with_capacity(reps);
                let mut last = None;
                for _ in 0..reps {
                    let start = Instant::now();
                    let result = prepared.find_with_stats(&text);
                    times.push(start.elapsed());
                    last = Some(result);
                }
                let (found, stats) = last.expect("at least one repetition");
                times.sort();
                let report = BenchReport {
                    algorithm: algorithm.name(),
                    text_len: text.len(),
                    text_runs,
                    pattern_len: pattern.len(),
                    pattern_runs,
                    preprocess,
                    search_min: times[0],
                    search_median: times[times.len() / 2],
                    transitions: stats.transitions,
                    matches: found.len(),
                };
                pending.push(report);
            }
            check_agreement(&pending)?;
            reports.extend(pending);
        }
    }
    Ok(reports)
}

pub const CSV_HEADER: &str = "algorithm,text_len,text_runs,pattern_len,pattern_runs,preprocess_ns,\
search_min_ns,search_median_ns,throughput_bytes_per_s,transitions,matches";

/// Fails if the reports for one (text, pattern) pair disagree on the match
/// count.
pub fn check_agreement(reports: &[BenchReport]) -> Result<()> {
    let Some(first) = reports.first() else {
        return Ok(());
    };
    match reports.iter().find(|r| r.matches != first.matches) {
        None => Ok(()),
        Some(r) => Err(Error::Disagreement {
            pattern_desc: format!("pattern of length {} ({} runs)", r.pattern_len, r.pattern_runs),
            first: first.algorithm,
            first_count: first.matches,
            second: r.algorithm,
            second_count: r.matches,
        }),
    }
}

/// One header line plus one comma-separated line per report.
pub fn render_csv(reports: &[BenchReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{:.0},{},{}",
            r.algorithm,
            r.text_len,
            r.text_runs,
            r.pattern_len,
            r.pattern_runs,
            r.preprocess.as_nanos(),
            r.search_min.as_nanos(),
            r.search_median.as_nanos(),
            r.throughput(),
            r.transitions,
            r.matches,
        );
    }
    out
}

/// Aligned table for terminals.
pub fn render_table(reports: &[BenchReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<13} {:>10} {:>9} {:>6} {:>5} {:>11} {:>11} {:>10} {:>12} {:>8}",
        "algorithm", "n", "runs(T)", "m", "rho", "min", "median", "MB/s", "transitions", "matches"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<13} {:>10} {:>9} {:>6} {:>5} {:>11} {:>11} {:>10.1} {:>12} {:>8}",
            r.algorithm,
            r.text_len,
            r.text_runs,
            r.pattern_len,
            r.pattern_runs,
            format!("{:.3?}", r.search_min),
            format!("{:.3?}", r.search_median),
            r.throughput() / 1e6,
            r.transitions,
            r.matches,
        );
    }
    out
}
