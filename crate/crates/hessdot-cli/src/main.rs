//! `hessdot`: command-line front end for the hessdot library.
//!
//! Exit codes: 0 success, 1 usage error, 2 size guard, 3 theorem-level check
//! failure (conjecture findings do not change the exit code).

mod args;
mod cache;
mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hessdot::DecompositionCache;

use crate::args::{Cli, Command, Format};
use crate::commands::{parse_h, Output};
use crate::error::CliError;

fn render(output: &Output, format: Format) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            serde_json::to_writer(&mut out, &output.json).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(&output.csv_header)?;
            for row in &output.csv_rows {
                writer.write_record(row)?;
            }
            writer.flush()?;
        }
        Format::Pretty => write!(out, "{}", output.pretty)?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let config = &cli.config;
    if config.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build_global()
            .map_err(|e| {
                CliError::Usage(format!("cannot start {} threads: {e}", config.threads))
            })?;
    }
    let max_n = usize::try_from(config.max_n).unwrap_or(usize::MAX);
    let cache = match &config.cache_dir {
        Some(dir) => cache::disk_cache(dir)?,
        None => DecompositionCache::default(),
    };
    match &cli.command {
        Command::Analyze { h } => commands::analyze(&parse_h(h, max_n)?),
        Command::Decompose { h } => commands::decompose(&parse_h(h, max_n)?, &cache),
        Command::Betti { h, nu } => commands::betti(&parse_h(h, max_n)?, nu.as_deref(), &cache),
        Command::Orientations { h, list } => commands::orientations(&parse_h(h, max_n)?, *list),
        Command::Verify { target, which } => commands::verify(target, *which, max_n, &cache),
        Command::Enumerate {
            n,
            abelian,
            strictly_negative,
        } => commands::enumerate(*n, *abelian, *strictly_negative, max_n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version.
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let format = cli.config.format;
    let result = run(cli).and_then(|output| {
        render(&output, format)?;
        Ok(output.theorem_failure)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("error: a theorem-level check failed");
            ExitCode::from(3)
        }
        // The reader went away (e.g. `| head`); nothing left to report.
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
