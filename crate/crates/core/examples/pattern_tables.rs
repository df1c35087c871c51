//! Print the symbol and length rows built for a pattern.
//!
//! cargo run --example pattern_tables -- cttcct

use rlmatch::PatternTables;

fn main() -> rlmatch::Result<()> {
    let pattern = std::env::args().nth(1).unwrap_or_else(|| "cttcct".into());
    let t = PatternTables::new(pattern.as_bytes())?;
    let runs: Vec<String> = t.pattern_runs().runs().iter().map(|r| format!("{}^{}", r.symbol as char, r.len)).collect();
    println!("runs  {}  (rho={}, m={})", runs.join(" "), t.rho(), t.m());

    let mut symbols: Vec<u8> = t.pattern_runs().runs().iter().map(|r| r.symbol).collect();
    symbols.sort_unstable();
    symbols.dedup();
    for c in symbols {
        println!("b1[{}]  {:?}", c as char, t.b1(c));
    }
    for l in 1..=t.m() + 1 {
        println!("b2[{l}]  {:?}", t.b2(l));
    }
    println!("{} words per row, {} bytes", t.words_per_row(), t.memory_bytes());
    Ok(())
}
