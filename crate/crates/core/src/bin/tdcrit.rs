use std::io;
use std::process::ExitCode;

use tdcrit::cli;

fn main() -> ExitCode {
    cli::configure_threads();
    let code = cli::run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
