use std::io::Write;
use std::process::ExitCode;

use alexq::input::{load_matrix, InputSpec};
use alexq::verify::{Depth, VerifyOptions};
use alexq::{info, render_info, render_scan, render_snf, render_verify, scan, snf, verify, CliError, Format};
use clap::{Parser, Subcommand};

/// Adjoint groups and fundamental groups of finite Alexander quandles.
///
/// SPEC is JSON5, inline or a path ("-" reads stdin), in one of two shapes:
///   {orders: [3, 3], matrix: [[0, 2], [1, 1]]}
///   {prime: 3, poly: [a, b]}      for F_p[t]/(t^2 + a t + b)
#[derive(Parser)]
#[command(name = "alexq", version, verbatim_doc_comment)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Connectivity, S(M,T), pi_1 and simple connectivity.
    Info { spec: String },
    /// Run every verification suite; exits 1 on any failure.
    Verify {
        spec: String,
        #[arg(long, value_enum, default_value_t = Depth::Quick)]
        depth: Depth,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest group enumerated element by element.
        #[arg(long, default_value_t = alexq_core::quandle::DEFAULT_TABLE_CAP)]
        cap: usize,
    },
    /// All quadratic quotients of F_p[t] with nonzero constant term; exits 1
    /// if the pipeline disagrees with the closed forms.
    Scan {
        p: i64,
        #[arg(long, default_value_t = scan::DEFAULT_MAX_PRIME)]
        max_prime: i64,
    },
    /// Smith normal form of an integer matrix given as JSON5 rows.
    Snf { matrix: String },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Info { spec } => {
            let report = info::info(&InputSpec::load(&spec)?)?;
            stdout.write_all(render_info(&report, cli.format)?.as_bytes())?;
        }
        Command::Verify { spec, depth, seed, cap } => {
            let report = verify::verify(&InputSpec::load(&spec)?, &VerifyOptions { depth, seed, cap })?;
            stdout.write_all(render_verify(&report, cli.format)?.as_bytes())?;
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Scan { p, max_prime } => {
            let outcome = scan::scan(p, max_prime)?;
            stdout.write_all(render_scan(&outcome, cli.format)?.as_bytes())?;
            if !outcome.mismatches.is_empty() {
                for m in &outcome.mismatches {
                    eprintln!("mismatch: {m}");
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::Snf { matrix } => {
            let report = snf::snf(&load_matrix(&matrix)?)?;
            stdout.write_all(render_snf(&report, cli.format)?.as_bytes())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("alexq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
