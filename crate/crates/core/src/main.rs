use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = nuij_core::cli::dispatch(std::env::args_os());
    // a closed stdout (e.g. piping into `head`) is not worth a panic
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
