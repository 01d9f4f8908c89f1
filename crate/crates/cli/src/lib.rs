//! Command-line front end for `alexq-core`: input parsing, the `info`,
//! `verify`, `scan` and `snf` commands, and their table, CSV and JSON output.

pub mod error;
pub mod info;
pub mod input;
pub mod scan;
pub mod snf;
pub mod verify;

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

pub use error::CliError;
use info::InfoReport;
use scan::{ScanOutcome, ScanRecord};
use snf::SnfReport;
use verify::{Status, VerifyReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

pub const SCAN_CSV_HEADER: [&str; 7] = ["p", "a", "b", "connected", "s_factors", "simply_connected", "formula_value"];

/// `[3]`, `[2,4]`, `[]`.
pub fn factors_label(factors: &[u64]) -> String {
    let inner: Vec<String> = factors.iter().map(u64::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn opt_label<T>(v: &Option<T>, f: impl Fn(&T) -> String) -> String {
    v.as_ref().map(f).unwrap_or_else(|| "-".into())
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_from_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

pub fn render_info(r: &InfoReport, format: Format) -> Result<String, CliError> {
    let fields = [
        ("orders", factors_label(&r.orders)),
        ("matrix", format!("{:?}", r.matrix).replace(' ', "")),
        ("cardinality", r.cardinality.clone()),
        ("automorphism_valid", r.automorphism_valid.to_string()),
        ("connected", opt_label(&r.connected, bool::to_string)),
        ("s_invariant_factors", opt_label(&r.s_invariant_factors, |f| factors_label(f))),
        ("pi1_invariant_factors", opt_label(&r.pi1_invariant_factors, |f| factors_label(f))),
        ("simply_connected", opt_label(&r.simply_connected, bool::to_string)),
        ("pi1_isomorphic_to_s", opt_label(&r.pi1_isomorphic_to_s, bool::to_string)),
    ];
    match format {
        Format::Json => json(r),
        Format::Csv => csv_from_rows(
            &fields.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
            [fields.iter().map(|(_, v)| v.clone()).collect()],
        ),
        Format::Table => {
            let mut out = String::new();
            for (k, v) in &fields {
                let _ = writeln!(out, "{k:<22} {v}");
            }
            Ok(out)
        }
    }
}

fn scan_row(r: &ScanRecord) -> Vec<String> {
    vec![
        r.p.to_string(),
        r.a.to_string(),
        r.b.to_string(),
        r.connected.to_string(),
        factors_label(&r.s_invariant_factors),
        r.simply_connected.to_string(),
        r.formula_value.to_string(),
    ]
}

pub fn render_scan(outcome: &ScanOutcome, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(outcome),
        Format::Csv => csv_from_rows(&SCAN_CSV_HEADER, outcome.records.iter().map(scan_row)),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:>3} {:>3} {:>3} {:>9} {:>9} {:>16} {:>13}",
                "p", "a", "b", "connected", "s_factors", "simply_connected", "formula_value"
            );
            for r in &outcome.records {
                let row = scan_row(r);
                let _ = writeln!(
                    out,
                    "{:>3} {:>3} {:>3} {:>9} {:>9} {:>16} {:>13}",
                    row[0], row[1], row[2], row[3], row[4], row[5], row[6]
                );
            }
            Ok(out)
        }
    }
}

pub fn render_snf(r: &SnfReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let width = r.input.first().map_or(0, Vec::len);
            let rows = r.d.iter().cloned();
            let header: Vec<String> = (0..width).map(|j| format!("c{j}")).collect();
            csv_from_rows(&header.iter().map(String::as_str).collect::<Vec<_>>(), rows)
        }
        Format::Table => {
            let mut out = String::new();
            for (name, m) in [("U", &r.u), ("D", &r.d), ("V", &r.v)] {
                let _ = writeln!(out, "{name}:");
                for row in m {
                    let _ = writeln!(out, "  {}", row.join(" "));
                }
            }
            let _ = writeln!(out, "diagonal: [{}]", r.diagonal.join(","));
            Ok(out)
        }
    }
}

pub fn render_verify(r: &VerifyReport, format: Format) -> Result<String, CliError> {
    let label = |s: Status| match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
    };
    match format {
        Format::Json => json(r),
        Format::Csv => csv_from_rows(
            &["check", "status", "cases", "detail"],
            r.results
                .iter()
                .map(|c| vec![c.name.clone(), label(c.status).to_string(), c.cases.to_string(), c.detail.clone()]),
        ),
        Format::Table => {
            let mut out = String::new();
            for c in &r.results {
                let _ = writeln!(out, "{:<8} {:<26} {:>9}  {}", label(c.status), c.name, c.cases, c.detail);
            }
            let verdict = if r.passed { "all checks passed" } else { "verification FAILED" };
            let _ = writeln!(out, "{verdict}");
            Ok(out)
        }
    }
}
