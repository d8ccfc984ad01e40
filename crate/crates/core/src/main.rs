use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let seed = std::env::var(monodisk::cli::SEED_ENV).ok();
    let code = monodisk::cli::run(std::env::args_os(), &mut out, &mut err, seed);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
