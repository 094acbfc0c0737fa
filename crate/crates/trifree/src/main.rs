use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use trifree::cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = BufWriter::new(io::stdout().lock());
    let mut err = io::stderr().lock();
    let mut code = run(config, &mut input, &mut out, &mut err);
    if let Err(e) = out.flush() {
        let _ = writeln!(err, "trifree: io error: {e}");
        code = code.max(2);
    }
    ExitCode::from(code)
}
