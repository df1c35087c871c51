//! Encode a text as RLE1 and search the encoded stream without decoding it.
//! Offsets still refer to the decoded text.

use std::io::Cursor;

use rlmatch::matchers::{naive_search, search, Algorithm, TextSource};
use rlmatch::rle::{decode_to_vec, encode_to_vec, RleReader};

fn main() -> rlmatch::Result<()> {
    let text = b"aaaabbbbbbaaaabbbbbbbbbbbbaaaaaaaaab";
    let encoded = encode_to_vec(text);
    println!("{} bytes -> {} encoded bytes", text.len(), encoded.len());

    for run in RleReader::new(Cursor::new(&encoded))? {
        let run = run?;
        print!("{}x{} ", run.symbol as char, run.len);
    }
    println!();

    let pattern = b"aabbbbbbaa";
    let mut stream = Cursor::new(&encoded);
    let found = search(pattern, TextSource::Rle(&mut stream), Algorithm::RlShiftAnd)?;
    println!("matches at {:?}", found.as_slice());
    assert_eq!(found, naive_search(pattern, &decode_to_vec(&encoded)?)?);

    // Window-based matchers need random access and refuse a stream.
    let err = search(pattern, TextSource::Rle(&mut Cursor::new(&encoded)), Algorithm::RlBndm).unwrap_err();
    println!("rl-bndm on a stream: {err}");
    Ok(())
}
