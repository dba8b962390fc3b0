//! `gammabw`: bandwidths of gamma densities from the command line.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 2 invalid
//! parameters or usage, 3 failed `--verify`.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Failure;
use report::OutputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "gammabw",
    version,
    about = "Bandwidth of gamma-shaped densities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full width at a fraction of the maximum (half by default).
    Fwhm {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Also bisect for the crossings and fail with exit code 3 on disagreement.
        #[arg(long)]
        verify: bool,
    },
    /// Octave bandwidth log2(H / L).
    Octave {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Density sampled on [0, xmax], followed by the crossings at each --y.
    Curve {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, default_value_t = 512)]
        n: usize,
        /// Defaults to mode + 8 b sqrt(a).
        #[arg(long, allow_negative_numbers = true)]
        xmax: Option<f64>,
        /// Levels to annotate; repeatable.
        #[arg(long, default_values_t = [0.5], allow_negative_numbers = true)]
        y: Vec<f64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Exact FWHM against the Gaussian approximation, log-spaced in a (b = 1).
    Compare {
        #[arg(long, allow_negative_numbers = true)]
        a_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        a_max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gammabw: {e}");
            ExitCode::FAILURE
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format) = match cli.command {
        Command::Fwhm {
            a,
            b,
            y,
            format,
            verify,
        } => (commands::fwhm(a, b, y, verify), format),
        Command::Octave { a, b, y, format } => (commands::octave(a, b, y), format),
        Command::Curve {
            a,
            b,
            n,
            xmax,
            y,
            format,
        } => (commands::curve(a, b, n, xmax, &y), format),
        Command::Compare {
            a_min,
            a_max,
            points,
            format,
        } => (commands::compare(a_min, a_max, points), format),
    };
    match result {
        Ok(report) => emit(&report.render(format)),
        Err(Failure::Invalid(message)) => {
            eprintln!("gammabw: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Verification { report, message }) => {
            emit(&report.render(format));
            eprintln!("gammabw: {message}");
            ExitCode::from(3)
        }
    }
}
