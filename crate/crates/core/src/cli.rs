//! Command line front end.
//!
//! ```text
//! rlmatch search -p <pattern> [-f <pattern-file>] [--algo ...] [--rle] [--count|--quiet] <files...>
//! rlmatch encode <in> <out>
//! rlmatch decode <in> <out>
//! rlmatch stats -p <pattern>
//! rlmatch bench [--sigma N] [--length N] [--mean-run N] [--seed N]
//! ```
//!
//! `-` stands for standard input or output. `search` exits with 0 when
//! something matched, 1 when nothing did and 2 on any error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bench::{self, BenchConfig, GenSpec, PatternRule};
use crate::error::{Error, Result};
use crate::matchers::{plan, search, Algorithm, MatchSet, SourceKind, TextSource};
use crate::rle::{self, runs_of};
use crate::tables::PatternTables;

pub const EXIT_MATCH: i32 = 0;
pub const EXIT_NO_MATCH: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rlmatch", version, about = "Run-length encoded bit-parallel exact string search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report occurrences of a pattern (0-based byte offsets of match starts).
    Search(SearchArgs),
    /// Encode a file into the RLE1 format.
    Encode { input: PathBuf, output: PathBuf },
    /// Decode an RLE1 file.
    Decode { input: PathBuf, output: PathBuf },
    /// Print pattern statistics and table sizes.
    Stats {
        #[arg(short = 'p', long = "pattern")]
        pattern: OsString,
    },
    /// Time the matchers on generated text.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(short = 'p', long = "pattern", required_unless_present = "pattern_file", conflicts_with = "pattern_file")]
    pub pattern: Option<OsString>,
    /// Read the pattern bytes from a file (used verbatim).
    #[arg(short = 'f', long = "pattern-file")]
    pub pattern_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    pub algo: Algorithm,
    /// Inputs are RLE1 encoded; offsets still refer to the decoded text.
    #[arg(long)]
    pub rle: bool,
    /// Print the number of matches instead of offsets.
    #[arg(long, conflicts_with = "quiet")]
    pub count: bool,
    /// Print nothing; only the exit status reports the result.
    #[arg(short, long)]
    pub quiet: bool,
    /// Input files; `-` or none reads standard input.
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 2)]
    pub sigma: usize,
    #[arg(long, default_value_t = 1 << 22)]
    pub length: usize,
    #[arg(long = "mean-run", default_value_t = 16.0)]
    pub mean_run: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long = "pattern-len", default_value_t = 64)]
    pub pattern_len: usize,
    /// Only sample patterns with at most this many runs.
    #[arg(long = "max-pattern-runs")]
    pub max_pattern_runs: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub patterns: usize,
    /// Draw random patterns instead of substrings of the text.
    #[arg(long)]
    pub random_patterns: bool,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long = "algo", value_enum, num_args = 1..)]
    pub algos: Vec<Algorithm>,
    /// Emit comma-separated records instead of a table.
    #[arg(long)]
    pub csv: bool,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_ERROR } else { EXIT_MATCH };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return status;
        }
    };
    let status = match cli.command {
        Command::Search(args) => cmd_search(&args, stdin, stdout, stderr),
        Command::Encode { input, output } => report(cmd_encode(&input, &output, stdin, stdout), stderr),
        Command::Decode { input, output } => report(cmd_decode(&input, &output, stdin, stdout), stderr),
        Command::Stats { pattern } => report(cmd_stats(&os_bytes(pattern), stdout), stderr),
        Command::Bench(args) => report(cmd_bench(&args, stdout), stderr),
    };
    let _ = stdout.flush();
    status
}

fn report(result: Result<()>, stderr: &mut dyn Write) -> i32 {
    match result {
        Ok(()) => EXIT_MATCH,
        Err(e) => {
            let _ = writeln!(stderr, "rlmatch: {e}");
            EXIT_ERROR
        }
    }
}

#[cfg(unix)]
fn os_bytes(s: OsString) -> Vec<u8> {
    use std::os::unix::ffi::OsStringExt;
    s.into_vec()
}

#[cfg(not(unix))]
fn os_bytes(s: OsString) -> Vec<u8> {
    s.to_string_lossy().into_owned().into_bytes()
}

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read_all(path: &Path, stdin: &mut dyn Read) -> io::Result<Vec<u8>> {
    if is_stdio(path) {
        let mut buf = Vec::new();
        stdin.read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path)
    }
}

fn search_one(pattern: &[u8], path: &Path, args: &SearchArgs, stdin: &mut dyn Read) -> Result<MatchSet> {
    if !args.rle {
        let text = read_all(path, stdin)?;
        return search(pattern, TextSource::Raw(&text), args.algo);
    }
    match plan(pattern, SourceKind::RleStream, args.algo) {
        // Window-based algorithms need the decoded text; only files are
        // decoded up front, standard input stays a one-pass stream.
        Err(Error::IncompatibleSource(_)) if !is_stdio(path) => {
            let mut text = Vec::new();
            rle::decode_stream(BufReader::new(File::open(path)?), &mut text)?;
            search(pattern, TextSource::Raw(&text), args.algo)
        }
        Err(e) => Err(e),
        Ok(_) if is_stdio(path) => search(pattern, TextSource::Rle(stdin), args.algo),
        Ok(_) => {
            let mut file = File::open(path)?;
            search(pattern, TextSource::Rle(&mut file), args.algo)
        }
    }
}

/// `search`: one offset per line, or a count, or nothing with `--quiet`.
/// With several inputs each line is prefixed with the file name.
pub fn cmd_search(args: &SearchArgs, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let pattern = match (&args.pattern, &args.pattern_file) {
        (Some(p), _) => os_bytes(p.clone()),
        (None, Some(f)) => match std::fs::read(f) {
            Ok(p) => p,
            Err(e) => {
                let _ = writeln!(stderr, "rlmatch: {}: {e}", f.display());
                return EXIT_ERROR;
            }
        },
        (None, None) => unreachable!("clap requires a pattern"),
    };
    if pattern.is_empty() {
        let _ = writeln!(stderr, "rlmatch: {}", Error::EmptyPattern);
        return EXIT_ERROR;
    }
    let files = if args.files.is_empty() { vec![PathBuf::from("-")] } else { args.files.clone() };
    let prefix = files.len() > 1;
    let mut any_match = false;
    let mut any_error = false;
    for path in &files {
        let found = match search_one(&pattern, path, args, stdin) {
            Ok(found) => found,
            Err(e) => {
                let _ = writeln!(stderr, "rlmatch: {}: {e}", path.display());
                any_error = true;
                continue;
            }
        };
        any_match |= !found.is_empty();
        let written = if args.quiet {
            Ok(())
        } else if args.count {
            write_line(stdout, prefix.then_some(path), found.len())
        } else {
            found.iter().try_for_each(|&s| write_line(stdout, prefix.then_some(path), s))
        };
        if let Err(e) = written {
            let _ = writeln!(stderr, "rlmatch: {e}");
            return EXIT_ERROR;
        }
    }
    if any_error {
        EXIT_ERROR
    } else if any_match {
        EXIT_MATCH
    } else {
        EXIT_NO_MATCH
    }
}

fn write_line(out: &mut dyn Write, prefix: Option<&PathBuf>, value: usize) -> io::Result<()> {
    match prefix {
        Some(p) => writeln!(out, "{}:{value}", p.display()),
        None => writeln!(out, "{value}"),
    }
}

fn open_input<'a>(path: &Path, stdin: &'a mut dyn Read) -> io::Result<Box<dyn Read + 'a>> {
    Ok(if is_stdio(path) { Box::new(stdin) } else { Box::new(BufReader::new(File::open(path)?)) })
}

fn open_output<'a>(path: &Path, stdout: &'a mut dyn Write) -> io::Result<Box<dyn Write + 'a>> {
    Ok(if is_stdio(path) { Box::new(stdout) } else { Box::new(BufWriter::new(File::create(path)?)) })
}

pub fn cmd_encode(input: &Path, output: &Path, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<()> {
    let reader = open_input(input, stdin)?;
    let writer = open_output(output, stdout)?;
    rle::encode_stream(reader, writer)?;
    Ok(())
}

pub fn cmd_decode(input: &Path, output: &Path, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<()> {
    let reader = open_input(input, stdin)?;
    let writer = open_output(output, stdout)?;
    rle::decode_stream(reader, writer)?;
    Ok(())
}

pub fn cmd_stats(pattern: &[u8], out: &mut dyn Write) -> Result<()> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let rho = runs_of(pattern).count();
    writeln!(out, "m={}", pattern.len())?;
    writeln!(out, "rho={rho}")?;
    match PatternTables::new(pattern) {
        Ok(t) => {
            writeln!(out, "words_per_row={}", t.words_per_row())?;
            writeln!(out, "table_rows={}", 256 + t.m() + 1)?;
            writeln!(out, "table_bytes={}", t.memory_bytes())?;
        }
        Err(Error::SingleRunPattern) => {
            writeln!(out, "note: single-run pattern, searches use the single-symbol matcher")?;
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<()> {
    let defaults = BenchConfig::default();
    let patterns = if args.random_patterns {
        PatternRule::Random { len: args.pattern_len, count: args.patterns }
    } else {
        PatternRule::Substring { len: args.pattern_len, count: args.patterns, max_runs: args.max_pattern_runs }
    };
    let config = BenchConfig {
        texts: vec![GenSpec::geometric(args.sigma, args.length, args.mean_run, args.seed)],
        patterns,
        algorithms: if args.algos.is_empty() { defaults.algorithms } else { args.algos.clone() },
        repetitions: args.reps,
        seed: args.seed,
    };
    let reports = bench::run_benchmark(&config)?;
    let rendered = if args.csv { bench::render_csv(&reports) } else { bench::render_table(&reports) };
    out.write_all(rendered.as_bytes())?;
    Ok(())
}
