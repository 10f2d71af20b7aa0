use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = spreal_cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    let mut out = std::io::stdout().lock();
    if out.write_all(outcome.stdout.as_bytes()).and_then(|()| out.flush()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.code as u8)
}
