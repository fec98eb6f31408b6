use std::process::ExitCode;

use clap::Parser;
use lrc_lcd::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, out),
        None => {
            print!("{out}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
