use std::io::{self, BufWriter};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = qtopo::cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    drop(out);
    ExitCode::from(code as u8)
}
