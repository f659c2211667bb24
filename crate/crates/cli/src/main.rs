use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use semitrace_cli::{run, CliConfig};

fn main() -> ExitCode {
    let config = CliConfig::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&config, &mut out) {
        Ok(status) => {
            let _ = out.flush();
            ExitCode::from(status.code())
        }
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
