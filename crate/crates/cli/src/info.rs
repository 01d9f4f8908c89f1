use alexq_core::quandle::is_connected_linear;
use alexq_core::AdjContext;
use serde::Serialize;

use crate::error::CliError;
use crate::input::InputSpec;

/// Invariants of `(M, T)`. Fields past `automorphism_valid` are `None` when
/// `T` is not invertible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfoReport {
    pub orders: Vec<u64>,
    pub matrix: Vec<Vec<u64>>,
    pub cardinality: String,
    pub automorphism_valid: bool,
    pub connected: Option<bool>,
    pub s_invariant_factors: Option<Vec<u64>>,
    /// Invariant factors of the stabilizer of 0 among degree-zero elements.
    pub pi1_invariant_factors: Option<Vec<u64>>,
    pub simply_connected: Option<bool>,
    /// Whether pi_1 was found isomorphic to S(M,T); only reported for
    /// connected quandles, where the identification is a theorem.
    pub pi1_isomorphic_to_s: Option<bool>,
}

pub fn info(spec: &InputSpec) -> Result<InfoReport, CliError> {
    let (group, endo) = spec.build()?;
    let mut report = InfoReport {
        orders: group.orders().to_vec(),
        matrix: endo.entries().to_vec(),
        cardinality: group.cardinality().to_string(),
        automorphism_valid: group.is_automorphism(&endo),
        connected: None,
        s_invariant_factors: None,
        pi1_invariant_factors: None,
        simply_connected: None,
        pi1_isomorphic_to_s: None,
    };
    if !report.automorphism_valid {
        return Ok(report);
    }
    let connected = is_connected_linear(&group, &endo);
    let ctx = AdjContext::new(group, endo)?;
    let pi1 = ctx.pi1()?;
    let s = ctx.s_group().invariant_factors().to_vec();
    report.connected = Some(connected);
    report.simply_connected = Some(pi1.is_trivial());
    report.pi1_isomorphic_to_s = connected.then(|| pi1.invariant_factors == s);
    report.pi1_invariant_factors = Some(pi1.invariant_factors);
    report.s_invariant_factors = Some(s);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_over_f3_has_pi1_z3() {
        let r = info(&InputSpec::Quadratic { prime: 3, poly: [-1, 1] }).unwrap();
        assert_eq!(r.connected, Some(true));
        assert_eq!(r.pi1_invariant_factors, Some(vec![3]));
        assert_eq!(r.simply_connected, Some(false));
        assert_eq!(r.pi1_isomorphic_to_s, Some(true));
    }

    #[test]
    fn cyclic_cases() {
        let r = info(&InputSpec::Explicit { orders: vec![5], matrix: vec![vec![4]] }).unwrap();
        assert_eq!(r.connected, Some(true));
        assert_eq!(r.pi1_invariant_factors, Some(vec![]));

        let r = info(&InputSpec::Explicit { orders: vec![4], matrix: vec![vec![3]] }).unwrap();
        assert_eq!(r.connected, Some(false));
        assert_eq!(r.s_invariant_factors, Some(vec![2]));
        assert_eq!(r.pi1_isomorphic_to_s, None);
    }

    #[test]
    fn non_invertible_matrix() {
        let r = info(&InputSpec::Explicit { orders: vec![4], matrix: vec![vec![2]] }).unwrap();
        assert!(!r.automorphism_valid);
        assert_eq!(r.connected, None);
    }
}
