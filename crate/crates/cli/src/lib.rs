//! Command-line front end for `ddqpc-core`: flag and JSON config parsing,
//! scenario dispatch, CSV and SVG output.
//!
//! Exit codes: 0 on success, 1 on usage, configuration or I/O errors, and
//! 2 when the integration fails numerically.

mod args;
mod csv_out;
mod format;
mod svg;

use std::io::Write;
use std::path::Path;

pub use args::{parse_grid, parse_invocation, render_args};
pub use csv_out::{write_csv, write_csv_to};
pub use format::fmt_real;
pub use svg::{render_svg, ticks, write_svg_plot, PlotOptions};

use ddqpc_core::{ScenarioConfig, ScenarioResult};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// `--help` or `--version`; the text goes to stdout.
    #[error("{0}")]
    Info(String),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] ddqpc_core::Error),
}

impl CliError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }

    fn from_clap(e: clap::Error) -> Self {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(e.to_string()),
            _ => CliError::Usage(e.to_string().trim_end().to_string()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        use ddqpc_core::Error;
        match self {
            CliError::Info(_) => 0,
            CliError::Core(Error::NumericalFailure(_) | Error::NotCompletelyPositive { .. }) => 2,
            _ => 1,
        }
    }
}

/// Runs the scenario and writes any requested files. Nothing is written
/// unless the whole run succeeds.
pub fn execute(cfg: &ScenarioConfig) -> Result<ScenarioResult, CliError> {
    let result = ddqpc_core::experiments::run(cfg)?;
    if let Some(path) = &cfg.output.csv {
        write_csv(&result, path)?;
    }
    if let Some(path) = &cfg.output.svg {
        write_svg_plot(&result, path, &PlotOptions::for_result(&result))?;
    }
    Ok(result)
}

pub fn print_summary<W: Write>(result: &ScenarioResult, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{} ({} samples)", result.scenario, result.grid.len())?;
    for (k, v) in &result.summary {
        match v {
            Some(v) => writeln!(out, "  {k:<26} {}", fmt_real(*v))?,
            None => writeln!(out, "  {k:<26} not reached")?,
        }
    }
    Ok(())
}

/// Full command-line entry point; `argv` excludes the program name.
pub fn run_main<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let outcome = parse_invocation(argv).and_then(|cfg| execute(&cfg));
    match outcome {
        Ok(result) => {
            let _ = print_summary(&result, std::io::stdout().lock());
            0
        }
        Err(CliError::Info(text)) => {
            print!("{text}");
            0
        }
        Err(e) => {
            eprintln!("ddqpc: {e}");
            e.exit_code()
        }
    }
}
