use std::io;
use std::process::ExitCode;

use clap::Parser;
use lapcoef::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut io::stdin().lock(), &mut out) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("lapcoef: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
