use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use osp32::export::{basis_listing, matrix_json, named_operator, render_report, spectrum_table, OutputFormat};
use osp32::oscillator::{spectrum, OscillatorParams};
use osp32::repcore::CoefficientScheme;
use osp32::superlin::matrix_of;
use osp32::verify::{run_suite, RunConfig, Suite};

/// Fock representations of osp(3|2) and the associated Wigner quantum oscillator.
#[derive(Parser)]
#[command(name = "osp32", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Order of the representation V(p).
    #[arg(long, global = true, default_value_t = 1)]
    p: u32,
    /// Basis contains all labels with level n <= cutoff.
    #[arg(long, global = true, default_value_t = 8)]
    cutoff: u32,
    /// Residual tolerance for pass/fail checks.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 1.0)]
    mass: f64,
    #[arg(long, global = true, default_value_t = 1.0)]
    omega: f64,
    #[arg(long, global = true, default_value_t = 1.0)]
    hbar: f64,
    /// Defaults to json for verify and export, plain otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Ladder coefficients used by the Fock action.
    #[arg(long, global = true, value_enum, default_value_t = Scheme::Corrected)]
    scheme: Scheme,
}

#[derive(Subcommand)]
enum Command {
    /// List the basis in canonical order.
    Basis,
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Export the sparse matrix of an operator as JSON.
    Export {
        /// One of c1+, c1-, c2+, c2-, h1, h2, H, M1..M3, r1..r3, p1..p3.
        object: String,
    },
    /// Energy levels by closed form and by diagonalization.
    Spectrum,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Plain => OutputFormat::Plain,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Corrected,
    AsPrinted,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), std::io::Error> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let c = &cli.common;
    let config = RunConfig {
        p: c.p,
        cutoff: c.cutoff,
        tolerance: c.tol,
        params: OscillatorParams { mass: c.mass, omega: c.omega, hbar: c.hbar },
        scheme: match c.scheme {
            Scheme::Corrected => CoefficientScheme::Corrected,
            Scheme::AsPrinted => CoefficientScheme::AsPrinted,
        },
    };
    if let Err(e) = config.validate() {
        return usage(e);
    }
    let space = match config.space() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };

    let (text, passed) = match &cli.command {
        Command::Basis => {
            let format = c.format.map_or(OutputFormat::Plain, Into::into);
            (basis_listing(&space.basis(config.cutoff), &config.params, format), true)
        }
        Command::Verify { suite } => {
            let suite: Suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            if let Err(e) = config.validate_for_verification() {
                return usage(e);
            }
            let report = match run_suite(suite, &config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_FAIL);
                }
            };
            let format = c.format.map_or(OutputFormat::Json, Into::into);
            (render_report(&report, format), report.overall_pass)
        }
        Command::Export { object } => {
            if matches!(c.format, Some(Format::Csv | Format::Plain)) {
                return usage("matrix exports are JSON only");
            }
            let op = match named_operator(object, config.params) {
                Ok(op) => op,
                Err(e) => return usage(e),
            };
            let basis = space.basis(config.cutoff);
            match matrix_of(&op, &space, &basis) {
                Ok(m) => (matrix_json(&m, &basis), true),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_FAIL);
                }
            }
        }
        Command::Spectrum => {
            let report = match spectrum(config.params, &space, config.cutoff) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_FAIL);
                }
            };
            let format = c.format.map_or(OutputFormat::Plain, Into::into);
            (spectrum_table(&report, format, config.tolerance), report.consistent(config.tolerance))
        }
    };

    if let Err(e) = emit(&c.out, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_FAIL);
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
