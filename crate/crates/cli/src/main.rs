mod commands;
mod config;
mod error;
mod format;

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use config::{Cli, Command};
use error::{CliError, EXIT_USAGE};

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve(args) => emit(&commands::solve(&args)?, args.output.output.as_deref()),
        Command::Scan { common, points } => emit(
            &commands::scan(&common, points)?,
            common.output.output.as_deref(),
        ),
        Command::Density { common, grid } => emit(
            &commands::density(&common, grid)?,
            common.output.output.as_deref(),
        ),
        Command::Verify {
            output,
            sign_convention,
        } => {
            let (text, report) = commands::verify(output.format, sign_convention.into())?;
            emit(&text, output.output.as_deref())?;
            if report.all_exact() {
                Ok(())
            } else {
                for c in report.failures() {
                    eprintln!(
                        "identity failed: {} ({}), max deviation {}",
                        c.label, c.relation, c.max_deviation
                    );
                }
                Err(CliError::IdentityFailure(report.failures().count()))
            }
        }
        Command::Integrals(output) => emit(
            &commands::integrals(output.format)?,
            output.output.as_deref(),
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ladder: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
