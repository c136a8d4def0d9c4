use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tolerant::cli::{run, Cli};

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    for line in &outcome.stderr {
        eprintln!("error: {line}");
    }
    let written = match &outcome.output_path {
        Some(path) => std::fs::write(path, &outcome.stdout),
        None => std::io::stdout().write_all(outcome.stdout.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.exit.code())
}
