//! Input documents. A spec is either an explicit group and matrix,
//!
//! ```text
//! {"orders": [6, 2], "matrix": [[1, 3], [0, 1]]}
//! ```
//!
//! or a quadratic extension of a prime field, `F_p[t]/(t^2 + a t + b)` with
//! `T` multiplication by `t`:
//!
//! ```text
//! {"prime": 3, "poly": [-1, 1]}
//! ```
//!
//! Documents are JSON5, so unquoted keys are fine. Integers may be any
//! residue representative.

use std::fs;
use std::io::Read;

use alexq_core::{EndoMatrix, FinAbGroup};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum InputSpec {
    Explicit { orders: Vec<i64>, matrix: Vec<Vec<i64>> },
    Quadratic { prime: i64, poly: [i64; 2] },
}

pub fn is_prime(p: i64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `[[0, -b], [1, -a]]`, the matrix of multiplication by `t` on the basis
/// `1, t` of `F_p[t]/(t^2 + a t + b)`.
pub fn companion(a: i64, b: i64) -> Vec<Vec<i64>> {
    vec![vec![0, -b], vec![1, -a]]
}

impl InputSpec {
    /// Reads an inline document (starting with `{` or `[`), `-` for
    /// standard input, or a file path.
    pub fn load(arg: &str) -> Result<Self, CliError> {
        let text = read_document(arg)?;
        json5::from_str(&text)
            .map_err(|e| CliError::Input(format!("expected {{orders, matrix}} or {{prime, poly: [a, b]}}: {e}")))
    }

    /// The group and the (validated, not necessarily invertible) endomorphism.
    pub fn build(&self) -> Result<(FinAbGroup, EndoMatrix), CliError> {
        match self {
            InputSpec::Explicit { orders, matrix } => {
                let group = FinAbGroup::new(orders)?;
                let endo = group.endo(matrix)?;
                Ok((group, endo))
            }
            InputSpec::Quadratic { prime, poly: [a, b] } => {
                let p = *prime;
                if !is_prime(p) {
                    return Err(CliError::Input(format!("{p} is not prime")));
                }
                if b.rem_euclid(p) == 0 {
                    return Err(CliError::Input(format!("b = {b} vanishes mod {p}, so t is not invertible")));
                }
                let group = FinAbGroup::new(&[p, p])?;
                let endo = group.endo(&companion(*a, *b))?;
                Ok((group, endo))
            }
        }
    }
}

pub fn read_document(arg: &str) -> Result<String, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        return Ok(s);
    }
    fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.to_string(), source })
}

/// An integer matrix document, `[[2, 4], [6, 8]]`.
pub fn load_matrix(arg: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let text = read_document(arg)?;
    json5::from_str(&text).map_err(|e| CliError::Input(format!("expected a list of integer rows: {e}")))
}
