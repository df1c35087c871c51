//! Time the matchers on generated text with long runs.
//!
//! cargo run --release --example compare

use rlmatch::bench::{render_table, run_benchmark, BenchConfig, GenSpec, PatternRule};
use rlmatch::matchers::Algorithm;

fn main() -> rlmatch::Result<()> {
    let config = BenchConfig {
        texts: vec![
            GenSpec::geometric(2, 1 << 20, 4.0, 1),
            GenSpec::geometric(4, 1 << 20, 16.0, 2),
        ],
        patterns: PatternRule::Substring { len: 64, count: 2, max_runs: None },
        algorithms: vec![Algorithm::RlShiftAnd, Algorithm::RlBndm, Algorithm::ShiftAnd, Algorithm::Bndm],
        repetitions: 3,
        seed: 5,
    };
    // run_benchmark fails if any two matchers disagree
    let reports = run_benchmark(&config)?;
    print!("{}", render_table(&reports));
    Ok(())
}
