//! Show the windows the run-length BNDM matcher inspects and how far it
//! skips. Each window is extended to the end of the text run it stops in.

use rlmatch::bench::{gen_text, GenSpec};
use rlmatch::matchers::{naive_search, RlBndm};

fn main() -> rlmatch::Result<()> {
    let text = b"cttccttcct";
    let (found, windows) = RlBndm::new(b"cttcct")?.find_with_windows(text);
    println!("text    {}", String::from_utf8_lossy(text));
    for (b, s) in windows {
        println!("window  {}{}", " ".repeat(b), "^".repeat(s - b + 1));
    }
    println!("matches {:?}", found.as_slice());

    // On long-run text most of the text is never looked at.
    let text = gen_text(&GenSpec::geometric(4, 100_000, 12.0, 1))?;
    let pattern = &text[50_000..50_048];
    let (found, windows) = RlBndm::new(pattern)?.find_with_windows(&text);
    assert_eq!(found, naive_search(pattern, &text)?);
    println!("{} windows over {} bytes, {} matches", windows.len(), text.len(), found.len());
    Ok(())
}
