//! Lengths k such that the last k symbols of a pattern equal the first k
//! symbols of another string; the building block for matches that span
//! two text blocks.

use rlmatch::matchers::suffix_prefix_lengths;
use rlmatch::SuffixTables;

fn main() -> rlmatch::Result<()> {
    let pattern = b"abbaab";
    let tables = SuffixTables::new(pattern)?;
    for s in [&b"abbaabba"[..], b"bbaab", b"aab", b"ba"] {
        let lengths = suffix_prefix_lengths(&tables, s)?;
        println!("{:<10} {:?}", String::from_utf8_lossy(s), lengths);
        for &k in &lengths {
            assert_eq!(&pattern[pattern.len() - k..], &s[..k]);
        }
    }
    Ok(())
}
