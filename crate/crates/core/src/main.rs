use std::io::{self, BufWriter};

fn main() {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = rlmatch::cli::run(std::env::args_os(), &mut stdin.lock(), &mut out, &mut io::stderr());
    drop(out);
    std::process::exit(status);
}
