use std::process::ExitCode;

use clap::error::ErrorKind;
use gkverify::{execute, ConfigError, EXIT_CONFIG};

fn main() -> ExitCode {
    match execute(std::env::args_os()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(ConfigError::Cli(e)) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            ExitCode::SUCCESS
        }
        Err(ConfigError::Cli(e)) => {
            eprint!("{e}");
            ExitCode::from(EXIT_CONFIG as u8)
        }
        Err(e) => {
            eprintln!("gkverify: {e}");
            ExitCode::from(EXIT_CONFIG as u8)
        }
    }
}
