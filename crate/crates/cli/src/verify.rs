//! Verification suites for one `(M, T)`: oracle comparisons, the quandle
//! axioms, the generator relations, the identity chain, the group axioms of
//! the model, the action, `pi_1` and generator-word round trips.
//!
//! Pair and triple checks run over all of `M` when it is small enough for
//! the chosen depth, and over a seeded sample containing `0` otherwise.

use std::collections::BTreeSet;

use alexq_core::adjoint::CheckOutcome;
use alexq_core::exactalg::IntMatrix;
use alexq_core::oracle;
use alexq_core::quandle::{is_connected_linear, QuandleTable};
use alexq_core::{AdjContext, FElement, FinAbGroup, GroupElement};
use clap::ValueEnum;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::input::InputSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Depth {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub depth: Depth,
    pub seed: u64,
    /// Largest group that is enumerated element by element.
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { depth: Depth::Quick, seed: 0, cap: alexq_core::quandle::DEFAULT_TABLE_CAP }
    }
}

struct Bounds {
    pair_domain: usize,
    triple_domain: usize,
    model_points: usize,
    model_classes: usize,
    degree: i64,
    table_triples: u128,
    oracle_ambient: usize,
    round_trips: usize,
}

impl Bounds {
    fn for_depth(depth: Depth) -> Self {
        match depth {
            Depth::Quick => Bounds {
                pair_domain: 64,
                triple_domain: 12,
                model_points: 4,
                model_classes: 4,
                degree: 1,
                table_triples: 1 << 18,
                oracle_ambient: 256,
                round_trips: 100,
            },
            Depth::Full => Bounds {
                pair_domain: 256,
                triple_domain: 27,
                model_points: 6,
                model_classes: 8,
                degree: 2,
                table_triples: 1 << 24,
                oracle_ambient: 4096,
                round_trips: 100,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub status: Status,
    pub cases: u64,
    pub detail: String,
}

impl SuiteResult {
    fn skipped(name: &str, why: impl Into<String>) -> Self {
        SuiteResult { name: name.into(), status: Status::Skipped, cases: 0, detail: why.into() }
    }

    fn check(name: &str, cases: u64, failure: Option<String>, detail: impl Into<String>) -> Self {
        match failure {
            None => SuiteResult { name: name.into(), status: Status::Pass, cases, detail: detail.into() },
            Some(f) => SuiteResult { name: name.into(), status: Status::Fail, cases, detail: f },
        }
    }
}

impl From<CheckOutcome> for SuiteResult {
    fn from(c: CheckOutcome) -> Self {
        SuiteResult::check(c.name, c.cases, c.counterexample, c.statement)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub orders: Vec<u64>,
    pub connected: bool,
    pub depth: Depth,
    pub seed: u64,
    pub results: Vec<SuiteResult>,
    pub passed: bool,
}

/// All of `group` if it has at most `limit` elements, else `0` plus random
/// distinct elements up to `limit`.
pub fn sample_domain(group: &FinAbGroup, limit: usize, rng: &mut ChaCha8Rng) -> Vec<GroupElement> {
    if group.cardinality() <= limit as u128 {
        return group.elements().collect();
    }
    let mut picked = BTreeSet::new();
    picked.insert(group.zero());
    while picked.len() < limit.max(1) {
        picked.insert(random_element(group, rng));
    }
    picked.into_iter().collect()
}

pub fn random_element(group: &FinAbGroup, rng: &mut ChaCha8Rng) -> GroupElement {
    let coords: Vec<u64> = group.orders().iter().map(|&o| rng.gen_range(0..o)).collect();
    group.element_from_u64(&coords).expect("coordinate count matches")
}

pub fn random_f_element(ctx: &AdjContext, degree: i64, rng: &mut ChaCha8Rng) -> FElement {
    FElement::new(
        rng.gen_range(-degree..=degree),
        random_element(ctx.group(), rng),
        random_element(ctx.s_group().quotient(), rng),
    )
}

/// `eval(express(g)) == g` on `count` seeded random elements with degrees in `[-3, 3]`.
pub fn round_trip(ctx: &AdjContext, count: usize, seed: u64) -> Result<CheckOutcome, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexample = None;
    for _ in 0..count {
        let g = random_f_element(ctx, 3, &mut rng);
        let word = ctx.express_in_generators(&g)?;
        let back = ctx.eval_word(&word);
        if back != g && counterexample.is_none() {
            counterexample = Some(format!("{g} -> {word} -> {back}"));
        }
    }
    Ok(CheckOutcome {
        name: "round_trip",
        statement: "eval_word(express_in_generators(g)) = g",
        cases: count as u64,
        counterexample,
    })
}

pub fn verify(spec: &InputSpec, opts: &VerifyOptions) -> Result<VerifyReport, CliError> {
    let (group, endo) = spec.build()?;
    if !group.is_automorphism(&endo) {
        return Err(CliError::Input("the matrix is not an automorphism".into()));
    }
    let bounds = Bounds::for_depth(opts.depth);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut results = Vec::new();
    let size = group.cardinality();
    let enumerable = size <= opts.cap as u128;

    if enumerable {
        let img = oracle::image_size(&group, &endo, opts.cap)?;
        let fail = (img as u128 != size).then(|| format!("image has {img} of {size} elements"));
        results.push(SuiteResult::check("automorphism_enumeration", size as u64, fail, "T is a bijection"));
    } else {
        results.push(SuiteResult::skipped("automorphism_enumeration", "group above cap"));
    }

    let linear_connected = is_connected_linear(&group, &endo);
    if enumerable {
        let table = QuandleTable::alexander(&group, &endo, opts.cap)?;
        if size * size * size <= bounds.table_triples {
            let fail = table.first_violation().map(|v| v.to_string());
            results.push(SuiteResult::check("quandle_axioms", (size * size * size) as u64, fail, "table is a quandle"));
        } else {
            results.push(SuiteResult::skipped("quandle_axioms", "n^3 above depth budget"));
        }
        let orbit = table.is_connected();
        let fail = (orbit != linear_connected)
            .then(|| format!("orbit says {orbit}, 1 - T invertible says {linear_connected}"));
        results.push(SuiteResult::check("connectivity", size as u64, fail, "orbit test agrees with 1 - T"));
    } else {
        results.push(SuiteResult::skipped("quandle_axioms", "group above cap"));
        results.push(SuiteResult::skipped("connectivity", "group above cap"));
    }

    let ctx = AdjContext::new(group.clone(), endo.clone())?;
    let ts = ctx.s_group().tensor();
    let ambient = ts.as_group().cardinality();
    if ambient <= bounds.oracle_ambient.min(opts.cap) as u128 {
        let n = ts.gen_orders().len();
        let tau = ts.tau_matrix(&endo);
        let rel = IntMatrix::from_fn(n, n, |i, j| BigInt::from(i64::from(i == j)) - tau.get(i, j));
        let census = oracle::quotient_census(ts.gen_orders(), &rel, opts.cap)?;
        let expected = oracle::census_of_factors(ctx.s_group().invariant_factors());
        let fail = (census != expected).then(|| format!("enumeration {census:?} vs SNF {expected:?}"));
        results.push(SuiteResult::check("s_group_oracle", ambient as u64, fail, "SNF cokernel matches enumeration"));
    } else {
        results.push(SuiteResult::skipped("s_group_oracle", "tensor square above depth budget"));
    }

    let pair_domain = sample_domain(&group, bounds.pair_domain, &mut rng);
    results.push(ctx.check_phi_relations(&pair_domain).into());

    let triple_domain = sample_domain(&group, bounds.triple_domain, &mut rng);
    results.extend(ctx.verify_identity_suite(&triple_domain).checks.into_iter().map(SuiteResult::from));

    let points = sample_domain(&group, bounds.model_points, &mut rng);
    let classes = sample_domain(ctx.s_group().quotient(), bounds.model_classes, &mut rng);
    let mut model = Vec::new();
    for k in -bounds.degree..=bounds.degree {
        for x in &points {
            for a in &classes {
                model.push(FElement::new(k, x.clone(), a.clone()));
            }
        }
    }
    results.push(ctx.check_associativity(&model, &model, &model).into());
    results.push(ctx.check_central_classes(&model).into());
    results.push(ctx.check_inverses(&model).into());
    results.push(ctx.check_degree_laws(&model, &model).into());
    results.push(ctx.check_action(&points, &model, &model).into());

    if enumerable && size * ctx.s_group().quotient().cardinality() <= opts.cap as u128 * 16 {
        results.push(ctx.check_orbit_and_stabilizer().into());
    } else {
        results.push(SuiteResult::skipped("orbit_stabilizer", "M x S above cap"));
    }

    if ctx.is_connected() {
        let pi1 = ctx.pi1()?;
        let s = ctx.s_group().invariant_factors();
        let fail = (pi1.invariant_factors != s).then(|| format!("pi1 {:?} vs S {:?}", pi1.invariant_factors, s));
        results.push(SuiteResult::check("pi1_equals_s", 1, fail, "pi1 is isomorphic to S(M,T)"));
        results.push(round_trip(&ctx, bounds.round_trips, opts.seed)?.into());
    } else {
        results.push(SuiteResult::skipped("pi1_equals_s", "quandle not connected"));
        results.push(SuiteResult::skipped("round_trip", "quandle not connected"));
    }

    let passed = results.iter().all(|r| r.status != Status::Fail);
    Ok(VerifyReport {
        orders: group.orders().to_vec(),
        connected: ctx.is_connected(),
        depth: opts.depth,
        seed: opts.seed,
        results,
        passed,
    })
}
