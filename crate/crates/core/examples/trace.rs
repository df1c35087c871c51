//! Step the run-length Shift-And automaton one text run at a time and
//! print the active pattern runs after each step.

use rlmatch::matchers::RlShiftAnd;
use rlmatch::rle::runs_of;

fn main() -> rlmatch::Result<()> {
    let pattern = b"cttcct";
    let text = b"cttccttcct";
    let matcher = RlShiftAnd::new(pattern)?;
    let steps = matcher.trace(runs_of(text));
    let mut end = 0;
    for (run, d) in runs_of(text).zip(&steps) {
        end += run.len;
        let active: Vec<usize> = d.iter_ones().map(|i| i + 1).collect();
        let hit = if d.test_high() { "  match" } else { "" };
        println!("{}x{} (ends at {end:>2})  runs {active:?}{hit}", run.symbol as char, run.len);
    }
    println!("starts {:?}", matcher.find(text).as_slice());
    Ok(())
}
