use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use confchi::cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::from(Cli::parse());
    let input = if config.command.needs_input() {
        let path = config.input_path.as_ref().expect("clap enforces the input argument");
        let bytes = if path.as_os_str() == "-" {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf).map(|_| buf)
        } else {
            std::fs::read(path)
        };
        match bytes {
            Ok(b) => Some(b),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
    } else {
        None
    };
    let outcome = run(&config, input.as_deref());
    io::stdout().write_all(outcome.stdout.as_bytes()).ok();
    io::stderr().write_all(outcome.stderr.as_bytes()).ok();
    ExitCode::from(outcome.code as u8)
}
