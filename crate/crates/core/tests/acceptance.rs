//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

use std::io::Write as _;
use std::time::Instant;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rlmatch::bench::{run_benchmark, BenchConfig, GenSpec, PatternRule};
use rlmatch::bitvec::{words_for, BitVec, Fill, WORD_BITS};
use rlmatch::matchers::{
    naive_search, search, suffix_prefix_lengths, Algorithm, Bndm, RlBndm, RlShiftAnd, ShiftAnd, TextSource,
};
use rlmatch::rle::{self, runs_of, DecodeError, RunSeq};
use rlmatch::tables::{PatternTables, SuffixTables};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn bits(v: &BitVec) -> Vec<usize> {
    v.iter_ones().collect()
}

fn criterion_1() -> Outcome {
    let t = PatternTables::new(b"cttcct").map_err(|e| e.to_string())?;
    ensure!(bits(t.b1(b'c')) == [0, 2], "B1(c) = {:?}", bits(t.b1(b'c')));
    ensure!(bits(t.b1(b't')) == [1, 3], "B1(t) = {:?}", bits(t.b1(b't')));
    ensure!(bits(t.b2(1)) == [0, 3], "B2(1) = {:?}", bits(t.b2(1)));
    ensure!(bits(t.b2(2)) == [0, 1, 2, 3], "B2(2) = {:?}", bits(t.b2(2)));
    for l in 3..=7 {
        ensure!(bits(t.b2(l)) == [0, 3], "B2({l}) = {:?}", bits(t.b2(l)));
    }
    ensure!(t.rho() == 4, "rho = {}", t.rho());
    Ok("B1, B2 and rho = 4 match the worked example".into())
}

fn criterion_2() -> Outcome {
    let sa = RlShiftAnd::new(b"cttcct").map_err(|e| e.to_string())?;
    let trace: Vec<Vec<usize>> = sa
        .trace(runs_of(b"cttccttcct"))
        .iter()
        .map(|d| d.iter_ones().map(|b| b + 1).collect())
        .collect();
    let want: Vec<Vec<usize>> = vec![vec![1], vec![2], vec![1, 3], vec![2, 4], vec![1, 3], vec![4]];
    ensure!(trace == want, "trace {trace:?}");
    let found = sa.find(b"cttccttcct");
    ensure!(found.as_slice() == [0, 4], "matches {:?}", found);
    Ok(format!("configurations {trace:?}, matches {:?}", found.as_slice()))
}

/// Text with a mix of short and long runs over `sigma` symbols.
fn random_text(rng: &mut StdRng, sigma: u8, n: usize) -> Vec<u8> {
    let mean = [1.0, 2.0, 4.0, 10.0][rng.gen_range(0..4)];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let c = rng.gen_range(0..sigma);
        let len = 1 + (-(rng.gen::<f64>().max(1e-12)).ln() * (mean - 0.5)) as usize;
        out.resize((out.len() + len).min(n), c);
    }
    out
}

fn random_pattern(rng: &mut StdRng, text: &[u8], sigma: u8, kind: u32) -> Vec<u8> {
    let m_max = 200usize;
    match kind {
        // substring of the text
        0..=4 if !text.is_empty() => {
            let m = rng.gen_range(1..=m_max.min(text.len()));
            let at = rng.gen_range(0..=text.len() - m);
            text[at..at + m].to_vec()
        }
        // single run
        5 => vec![rng.gen_range(0..sigma); rng.gen_range(1..=12)],
        // many runs: adjacent symbols always differ, rho = m > 2w
        6 => {
            let m = rng.gen_range(2 * WORD_BITS + 1..=m_max);
            let mut p = vec![rng.gen_range(0..sigma)];
            while p.len() < m {
                let last = *p.last().unwrap();
                let c = (last + rng.gen_range(1..sigma)) % sigma;
                p.push(c);
            }
            p
        }
        _ => {
            let m = rng.gen_range(1..=m_max.min(20));
            (0..m).map(|_| rng.gen_range(0..sigma)).collect()
        }
    }
}

struct OracleRun {
    cases: usize,
    multiword_cases: usize,
    single_run_cases: usize,
    total_matches: usize,
    run_end_checks: usize,
    double_end_runs: usize,
}

fn oracle_equivalence() -> Result<OracleRun, String> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut r = OracleRun {
        cases: 0,
        multiword_cases: 0,
        single_run_cases: 0,
        total_matches: 0,
        run_end_checks: 0,
        double_end_runs: 0,
    };
    let sigmas = [2u8, 3, 4, 16];
    while r.cases < 10_000 {
        let sigma = sigmas[r.cases % sigmas.len()];
        let n = rng.gen_range(0..=2000);
        let text = random_text(&mut rng, sigma, n);
        let kind = rng.gen_range(0..8);
        let pattern = random_pattern(&mut rng, &text, sigma, kind);
        let want = naive_search(&pattern, &text).map_err(|e| e.to_string())?;
        let rho = runs_of(&pattern).count();
        let label = |name: &str| format!("{name} on case {} (sigma {sigma}, n {n}, m {}, rho {rho})", r.cases, pattern.len());

        if rho >= 2 {
            let got = RlShiftAnd::new(&pattern).map_err(|e| e.to_string())?.find(&text);
            ensure!(got == want, "{}: {:?} != {:?}", label("rl-shift-and"), got, want);
            let got = RlBndm::new(&pattern).map_err(|e| e.to_string())?.find(&text);
            ensure!(got == want, "{}: {:?} != {:?}", label("rl-bndm"), got, want);
            if rho > 2 * WORD_BITS {
                r.multiword_cases += 1;
            }
            // at most one occurrence ends inside each text run
            let runs = RunSeq::from_bytes(&text);
            let mut ends: Vec<usize> =
                want.iter().map(|&p| runs.run_at(p + pattern.len() - 1).expect("end inside text")).collect();
            r.run_end_checks += ends.len();
            let before = ends.len();
            ends.dedup();
            r.double_end_runs += before - ends.len();
        } else {
            r.single_run_cases += 1;
        }
        let got = ShiftAnd::new(&pattern).map_err(|e| e.to_string())?.find(&text);
        ensure!(got == want, "{}: {:?} != {:?}", label("shift-and"), got, want);
        let got = Bndm::new(&pattern).map_err(|e| e.to_string())?.find(&text);
        ensure!(got == want, "{}: {:?} != {:?}", label("bndm"), got, want);
        for algo in std::iter::once(Algorithm::Auto).chain(Algorithm::EXPLICIT) {
            let got = search(&pattern, TextSource::Raw(&text), algo).map_err(|e| e.to_string())?;
            ensure!(got == want, "{}: {:?} != {:?}", label(&format!("search --algo {algo}")), got, want);
        }
        let encoded = rle::encode_to_vec(&text);
        for algo in [Algorithm::Auto, Algorithm::RlShiftAnd, Algorithm::ShiftAnd] {
            let mut reader = &encoded[..];
            let got = search(&pattern, TextSource::Rle(&mut reader), algo).map_err(|e| e.to_string())?;
            ensure!(got == want, "{}: {:?} != {:?}", label(&format!("search --rle --algo {algo}")), got, want);
        }
        r.total_matches += want.len();
        r.cases += 1;
    }
    Ok(r)
}

fn criterion_3_and_4() -> (Outcome, Outcome) {
    let start = Instant::now();
    match oracle_equivalence() {
        Err(e) => (Err(e), Err("not evaluated: oracle run aborted".into())),
        Ok(r) => {
            let c3 = if r.multiword_cases == 0 || r.single_run_cases == 0 {
                Err(format!(
                    "coverage: {} multi-word cases, {} single-run cases",
                    r.multiword_cases, r.single_run_cases
                ))
            } else {
                Ok(format!(
                    "{} cases ({} with rho > {}, {} single-run), {} matches, all equal to naive in {:.1?}",
                    r.cases,
                    r.multiword_cases,
                    2 * WORD_BITS,
                    r.single_run_cases,
                    r.total_matches,
                    start.elapsed()
                ))
            };
            let c4 = if r.double_end_runs == 0 {
                Ok(format!("{} occurrence ends checked, 0 runs with two ends", r.run_end_checks))
            } else {
                Err(format!("{} violations", r.double_end_runs))
            };
            (c3, c4)
        }
    }
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for i in 0..100 {
        let sigma = [2u8, 3, 4, 16][i % 4];
        let n = rng.gen_range(0..5000);
        let text = random_text(&mut rng, sigma, n);
        let boundaries = (0..text.len()).filter(|&k| k == 0 || text[k] != text[k - 1]).count();
        let pattern: Vec<u8> = vec![0, 1, 0];
        let (_, rl) = RlShiftAnd::new(&pattern).unwrap().find_with_stats(&text);
        let (_, classic) = ShiftAnd::new(&pattern).unwrap().find_with_stats(&text);
        ensure!(rl.transitions as usize == boundaries, "text {i}: rl-shift-and {} != |rle(T)| {boundaries}", rl.transitions);
        ensure!(classic.transitions as usize == text.len(), "text {i}: shift-and {} != |T| {}", classic.transitions, text.len());
    }
    Ok("100 texts: rl-shift-and = |rle(T)|, shift-and = |T|".into())
}

fn to_big(v: &BitVec) -> BigUint {
    let digits: Vec<u32> = v.words().iter().flat_map(|&w| [w as u32, (w >> 32) as u32]).collect();
    BigUint::new(digits)
}

fn mask(width: usize) -> BigUint {
    (BigUint::from(1u8) << width) - 1u8
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let max_width = 4 * WORD_BITS + 3;
    let mut ops = 0usize;
    while ops < 100_000 {
        let width = rng.gen_range(1..=max_width);
        let rand_vec = |rng: &mut StdRng| {
            let words: Vec<u64> = (0..words_for(width)).map(|_| rng.gen()).collect();
            BitVec::from_words(width, &words).unwrap()
        };
        let mut v = rand_vec(&mut rng);
        let mut model = to_big(&v);
        ensure!(model <= mask(width), "from_words not canonical at width {width}");
        for _ in 0..10 {
            let other = rand_vec(&mut rng);
            let i = rng.gen_range(0..width);
            match rng.gen_range(0..8) {
                0 => {
                    let inject = rng.gen::<bool>();
                    v = v.shl1(inject);
                    model = ((model << 1u32) | BigUint::from(inject as u8)) & mask(width);
                }
                1 => {
                    v = v.and(&other);
                    model &= to_big(&other);
                }
                2 => {
                    v = v.or(&other);
                    model |= to_big(&other);
                }
                3 => {
                    v = v.set_bit(i);
                    model.set_bit(i as u64, true);
                }
                4 => ensure!(v.test_bit(i) == model.bit(i as u64), "test_bit({i}) width {width}"),
                5 => ensure!(v.test_high() == model.bit(width as u64 - 1), "test_high width {width}"),
                6 => ensure!(v.is_zero() == (model == BigUint::from(0u8)), "is_zero width {width}"),
                _ => {
                    let fill = if rng.gen() { Fill::Ones } else { Fill::Zeros };
                    v = BitVec::new(width, fill).unwrap();
                    model = if fill == Fill::Ones { mask(width) } else { BigUint::from(0u8) };
                }
            }
            ops += 1;
            ensure!(to_big(&v) == model, "state diverged at width {width} after {ops} ops");
            ensure!(v.words().len() == words_for(width), "word count at width {width}");
        }
    }
    ensure!(BitVec::new(0, Fill::Zeros).is_err(), "width 0 accepted");
    Ok(format!("{ops} operations over widths 1..={max_width} match the big-integer model"))
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    for i in 0..1000 {
        let n = rng.gen_range(0..=10_000);
        let sigma: u16 = rng.gen_range(1..=256);
        let mean = [1.0, 3.0, 50.0][i % 3];
        let mut text = Vec::with_capacity(n);
        while text.len() < n {
            let c = rng.gen_range(0..sigma) as u8;
            let len = 1 + (-(rng.gen::<f64>().max(1e-12)).ln() * mean) as usize;
            text.resize((text.len() + len).min(n), c);
        }
        let mut encoded = Vec::new();
        rle::encode_stream(&text[..], &mut encoded).map_err(|e| e.to_string())?;
        let mut decoded = Vec::new();
        rle::decode_stream(&encoded[..], &mut decoded).map_err(|e| format!("string {i}: {e}"))?;
        ensure!(decoded == text, "string {i} (n {n}, sigma {sigma}) did not round-trip");
    }
    let cases: [(&[u8], &str); 6] = [
        (b"RLX1a\x01", "bad-magic"),
        (b"RL", "bad-magic"),
        (b"RLE1a\x85", "truncated-varint"),
        (b"RLE1a\x00", "zero-length-run"),
        (b"RLE1a\x01a\x01", "adjacent-equal-symbols"),
        (b"RLE1a\x80\x80\x80\x80\x80\x80\x80\x80\x80\x02", "length-overflow"),
    ];
    for (bytes, want) in cases {
        let got = rle::decode_stream(bytes, std::io::sink()).err().map(|e: DecodeError| e.code());
        ensure!(got == Some(want), "{bytes:?}: got {got:?}, want {want}");
    }
    Ok("1000 random strings round-trip; 6 malformed streams raise their designated errors".into())
}

fn brute_suffix_prefixes(p: &[u8], s: &[u8]) -> Vec<usize> {
    (1..=s.len().min(p.len())).filter(|&l| p.ends_with(&s[..l])).collect()
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let mut cases = 0;
    let mut nonempty = 0;
    while cases < 1000 {
        let sigma = [2u8, 3, 4][cases % 3];
        let m = rng.gen_range(2..=60);
        let p = random_text(&mut rng, sigma, m);
        if runs_of(&p).count() < 2 {
            continue;
        }
        // half the inputs start with a genuine suffix of P
        let mut s = if rng.gen() {
            let k = rng.gen_range(1..=p.len());
            p[p.len() - k..].to_vec()
        } else {
            Vec::new()
        };
        let extra = rng.gen_range(if s.is_empty() { 1 } else { 0 }..=30);
        s.extend(random_text(&mut rng, sigma, extra));
        let st = SuffixTables::new(&p).map_err(|e| e.to_string())?;
        let got = suffix_prefix_lengths(&st, &s).map_err(|e| e.to_string())?;
        let want = brute_suffix_prefixes(&p, &s);
        ensure!(got == want, "P {p:?} S {s:?}: {got:?} != {want:?}");
        nonempty += usize::from(!want.is_empty());
        cases += 1;
    }
    Ok(format!("{cases} pairs equal brute force ({nonempty} with at least one length)"))
}

fn criterion_9() -> Outcome {
    let config = BenchConfig {
        texts: vec![GenSpec::geometric(2, 10_000_000, 16.0, 9)],
        patterns: PatternRule::Substring { len: 512, count: 1, max_runs: Some(64) },
        algorithms: vec![Algorithm::RlShiftAnd, Algorithm::ShiftAnd],
        repetitions: 3,
        seed: 9,
    };
    let reports = run_benchmark(&config).map_err(|e| e.to_string())?;
    let rl = &reports[0];
    let classic = &reports[1];
    ensure!(rl.pattern_runs <= 64 && rl.pattern_len == 512, "pattern m {} rho {}", rl.pattern_len, rl.pattern_runs);
    let ratio = rl.throughput() / classic.throughput();
    let detail = format!(
        "rl-shift-and {:.1} MB/s, shift-and {:.1} MB/s ({} words/symbol), ratio {:.2} (m 512, rho {}, {} matches)",
        rl.throughput() / 1e6,
        classic.throughput() / 1e6,
        words_for(512),
        ratio,
        rl.pattern_runs,
        rl.matches
    );
    if ratio > 1.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() {
    let (c3, c4) = criterion_3_and_4();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 worked-example tables", criterion_1()),
        ("2 worked-example trace", criterion_2()),
        ("3 oracle equivalence", c3),
        ("4 one occurrence end per text run", c4),
        ("5 transition counts", criterion_5()),
        ("6 bit vector oracle", criterion_6()),
        ("7 RLE1 codec", criterion_7()),
        ("8 suffix-prefix lengths", criterion_8()),
        ("9 throughput rl-shift-and vs shift-and", criterion_9()),
    ];
    let mut failed = 0;
    let mut out = std::io::stdout().lock();
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => writeln!(out, "criterion {name}: PASS ({detail})").unwrap(),
            Err(detail) => {
                failed += 1;
                writeln!(out, "criterion {name}: FAIL ({detail})").unwrap();
            }
        }
    }
    writeln!(out, "acceptance: {} passed, {failed} failed", results.len() - failed).unwrap();
    drop(out);
    if failed > 0 {
        std::process::exit(1);
    }
}
