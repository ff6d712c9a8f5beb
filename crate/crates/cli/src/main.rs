use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = cli::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(u8::try_from(out.status).unwrap_or(1))
}
