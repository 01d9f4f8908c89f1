use alexq_core::exactalg::{smith_normal_form, IntMatrix};
use serde::Serialize;

use crate::error::CliError;

/// Matrices as rows of decimal strings, since entries are unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnfReport {
    pub input: Vec<Vec<String>>,
    pub u: Vec<Vec<String>>,
    pub d: Vec<Vec<String>>,
    pub v: Vec<Vec<String>>,
    pub diagonal: Vec<String>,
}

fn rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|v| v.to_string()).collect()).collect()
}

pub fn snf(matrix: &[Vec<i64>]) -> Result<SnfReport, CliError> {
    let a = IntMatrix::from_rows(matrix)?;
    let s = smith_normal_form(&a);
    Ok(SnfReport {
        input: rows(&a),
        u: rows(&s.u),
        d: rows(&s.d),
        v: rows(&s.v),
        diagonal: s.diagonal().iter().map(|v| v.to_string()).collect(),
    })
}
