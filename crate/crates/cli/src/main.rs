//! `schubertine` command-line front end.

mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use schubertine::Error;

use args::{Cli, Format};
use render::{canonical, error_json};

const THREADS_VAR: &str = "SCHUBERTINE_THREADS";

fn configure_threads() {
    let Ok(raw) = std::env::var(THREADS_VAR) else { return };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            // Fails only if a pool already exists, which cannot happen this early.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => {
            eprintln!("warning: ignoring {THREADS_VAR}={raw:?}; expected a positive integer");
        }
    }
}

/// Parses argv; every flag error ends with exit code 2 and a usage line.
fn parse_args() -> Cli {
    match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let msg = e.render().to_string();
            eprint!("{msg}");
            if !msg.contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            std::process::exit(2);
        }
        Err(e) => e.exit(),
    }
}

/// Writes one line to stdout; a closed pipe is not an error.
fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}").and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = parse_args();
    configure_threads();
    let format = cli.format;
    match commands::run(&cli.command) {
        Ok(out) => {
            let body = match format {
                Format::Json => canonical(&out.json).to_string(),
                Format::Text => out.text,
                Format::Latex => out.latex.unwrap_or(out.text),
            };
            emit(&body);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        // Malformed flag values are usage errors, like any other flag error.
        Err(Error::Parse(msg)) => Cli::command().error(ErrorKind::ValueValidation, msg).exit(),
        Err(e) => {
            emit(&canonical(&error_json(&e)).to_string());
            ExitCode::from(1)
        }
    }
}
