//! Search a byte string with every matcher and show they agree.
//!
//! cargo run --example search_text -- cttcct cttccttcct

use rlmatch::matchers::{search, Algorithm, TextSource};

fn main() -> rlmatch::Result<()> {
    let mut args = std::env::args().skip(1);
    let pattern = args.next().unwrap_or_else(|| "cttcct".into());
    let text = args.next().unwrap_or_else(|| "cttccttcct".into());

    for algo in [Algorithm::Auto].into_iter().chain(Algorithm::EXPLICIT) {
        let found = search(pattern.as_bytes(), TextSource::Raw(text.as_bytes()), algo)?;
        println!("{:<13} {:?}", algo.name(), found.as_slice());
    }
    Ok(())
}
