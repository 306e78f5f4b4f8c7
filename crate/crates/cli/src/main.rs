use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use projgeo_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|()| stdout.flush())
                .is_err()
            {
                return ExitCode::from(projgeo_cli::error::code::BAD_INPUT);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("projgeo: {e}");
            ExitCode::from(e.code)
        }
    }
}
