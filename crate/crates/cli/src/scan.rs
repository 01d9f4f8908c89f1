//! Scan of `M = F_p[t]/(t^2 + a t + b)` over all `a` and all `b != 0`.
//!
//! The quandle is connected iff `1 + a + b != 0`, and in that case
//! `S(M,T)` is `F_p / (b^2 + ab - a - 1)`: trivial when the value is a unit,
//! `Z/p` when it vanishes. Both closed forms are checked against the full
//! Smith normal form pipeline.

use alexq_core::quandle::is_connected_linear;
use alexq_core::tensor::SGroup;
use alexq_core::FinAbGroup;
use serde::Serialize;

use crate::error::CliError;
use crate::input::{companion, is_prime};

pub const DEFAULT_MAX_PRIME: i64 = 23;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub p: i64,
    pub a: i64,
    pub b: i64,
    pub connected: bool,
    pub s_invariant_factors: Vec<u64>,
    pub simply_connected: bool,
    /// `(b^2 + ab - a - 1) mod p`
    pub formula_value: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    /// Disagreements between the pipeline and the closed forms.
    pub mismatches: Vec<String>,
}

pub fn formula_value(p: i64, a: i64, b: i64) -> i64 {
    (b * b + a * b - a - 1).rem_euclid(p)
}

pub fn scan_record(p: i64, a: i64, b: i64) -> Result<ScanRecord, CliError> {
    let group = FinAbGroup::new(&[p, p])?;
    let endo = group.endo(&companion(a, b))?;
    let connected = is_connected_linear(&group, &endo);
    let s = SGroup::new(&group, &endo)?;
    let factors = s.invariant_factors().to_vec();
    Ok(ScanRecord {
        p,
        a,
        b,
        connected,
        simply_connected: factors.is_empty(),
        s_invariant_factors: factors,
        formula_value: formula_value(p, a, b),
    })
}

pub fn scan(p: i64, max_prime: i64) -> Result<ScanOutcome, CliError> {
    if !is_prime(p) {
        return Err(CliError::Input(format!("{p} is not prime")));
    }
    if p > max_prime {
        return Err(CliError::Input(format!("{p} exceeds the prime cap {max_prime}")));
    }
    let mut outcome = ScanOutcome::default();
    for a in 0..p {
        for b in 1..p {
            let rec = scan_record(p, a, b)?;
            let expect_connected = (1 + a + b).rem_euclid(p) != 0;
            if rec.connected != expect_connected {
                outcome.mismatches.push(format!(
                    "p={p} a={a} b={b}: pipeline connected={}, 1+a+b rule says {expect_connected}",
                    rec.connected
                ));
            }
            if expect_connected {
                let expected: Vec<u64> = if rec.formula_value == 0 { vec![p as u64] } else { vec![] };
                if rec.s_invariant_factors != expected {
                    outcome.mismatches.push(format!(
                        "p={p} a={a} b={b}: pipeline S={:?}, formula value {} predicts {expected:?}",
                        rec.s_invariant_factors, rec.formula_value
                    ));
                }
            }
            outcome.records.push(rec);
        }
    }
    Ok(outcome)
}
