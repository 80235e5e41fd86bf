//! Seeded cross-checks of every solver against the oracles.

use std::ops::Range;

use bicenter_core::oracle::{oracle_pierce, oracle_solve};
use bicenter_core::piercing::{hits_all, pierce, BoundingBox, CornerRectangle, RectangleSet};
use bicenter_core::solve::paired_weights_equal;
use bicenter_core::{solve, Instance, InstanceSpec, Scalar, Solution, SolveError, SolverKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::format::write_spec;
use crate::gen::{generate, GenParams, GraphKind, PairMode};

/// The solver under test; swap it out to check that the harness notices bugs.
pub type SolverHook = fn(&Instance, SolverKind) -> Result<Solution, SolveError>;

pub fn default_solver(instance: &Instance, kind: SolverKind) -> Result<Solution, SolveError> {
    solve(instance, Some(kind)).map(|(s, _)| s)
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seeds: Range<u64>,
    pub max_n: usize,
    pub jobs: Option<usize>,
    pub oracle_cap: usize,
    pub solver: SolverHook,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Solver name, or `pierce`.
    pub check: String,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub seed: u64,
    pub instance: InstanceSpec,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub cases: usize,
    /// Failing cases in seed order.
    pub failures: Vec<CaseResult>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The instance checked for `seed`: trees on even seeds, connected graphs on
/// odd ones, integer weights 0–5 and lengths 1–9.
pub fn case_params(seed: u64, max_n: usize) -> GenParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0000_0000);
    let lo = 4.min(max_n).max(2);
    let n = rng.gen_range(lo..=max_n.max(lo));
    let kind = if seed.is_multiple_of(2) { GraphKind::Tree } else { GraphKind::ConnectedGraph };
    let m = match kind {
        GraphKind::Tree => n - 1,
        GraphKind::ConnectedGraph => rng.gen_range(n - 1..=(n * (n - 1) / 2).min(12).max(n - 1)),
    };
    let pairs = if rng.gen_bool(0.5) { PairMode::All } else { PairMode::Subset };
    GenParams { seed, n, m: Some(m), kind, weights: 0..=5, lengths: 1..=9, pairs }
}

/// A random family of corner-anchored rectangle sets in a box with sides up
/// to 4, coordinates on a grid of step 1/2. Up to 6 sets of up to 4 rectangles.
pub fn random_family(seed: u64) -> (BoundingBox, Vec<RectangleSet>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7069_6572_6365);
    let half = |n: i64| Scalar::from_ratio(n, 2);
    let (w, h) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
    let bbox = BoundingBox { width: half(w), height: half(h) };
    let k = rng.gen_range(1..=6);
    let sets = (0..k)
        .map(|index| {
            let count = rng.gen_range(1..=4);
            let rectangles = (0..count)
                .map(|_| {
                    let (x, y) = (rng.gen_range(0..=w), rng.gen_range(0..=h));
                    let (x_lo, x_hi) = if rng.gen_bool(0.5) { (0, x) } else { (x, w) };
                    let (y_lo, y_hi) = if rng.gen_bool(0.5) { (0, y) } else { (y, h) };
                    CornerRectangle { x_lo: half(x_lo), x_hi: half(x_hi), y_lo: half(y_lo), y_hi: half(y_hi) }
                })
                .collect();
            RectangleSet { index, rectangles }
        })
        .collect();
    (bbox, sets)
}

/// Solvers that accept `instance`.
pub fn applicable_solvers(instance: &Instance) -> Vec<SolverKind> {
    let mut out = vec![SolverKind::Graph];
    if instance.is_tree() {
        out.push(SolverKind::Tree);
        if paired_weights_equal(instance) {
            out.push(SolverKind::TreeUnweighted);
        }
    }
    out
}

fn pierce_mismatch(seed: u64) -> Option<Mismatch> {
    let (bbox, sets) = random_family(seed);
    let expected = oracle_pierce(&bbox, &sets);
    let found = match pierce(&bbox, &sets) {
        Ok(found) => found,
        Err(e) => return Some(Mismatch { check: "pierce".into(), expected: format!("{expected:?}"), found: e.to_string() }),
    };
    let valid = found.as_ref().is_none_or(|(x, y)| hits_all(&sets, x, y));
    (expected.is_some() != found.is_some() || !valid).then(|| Mismatch {
        check: "pierce".into(),
        expected: format!("{expected:?}"),
        found: format!("{found:?}"),
    })
}

pub fn check_seed(seed: u64, config: &VerifyConfig) -> CaseResult {
    let spec = generate(&case_params(seed, config.max_n)).expect("case parameters are valid");
    let instance = Instance::build(&spec).expect("generated instances are valid");
    let mut mismatches = Vec::new();
    match oracle_solve(&instance, config.oracle_cap) {
        Err(e) => mismatches.push(Mismatch { check: "oracle".into(), expected: "a value".into(), found: e.to_string() }),
        Ok(expected) => {
            for kind in applicable_solvers(&instance) {
                let found = match (config.solver)(&instance, kind) {
                    Ok(s) if s.lambda == expected => continue,
                    Ok(s) => s.lambda.to_string(),
                    Err(e) => e.to_string(),
                };
                mismatches.push(Mismatch { check: kind.name().into(), expected: expected.to_string(), found });
            }
        }
    }
    mismatches.extend(pierce_mismatch(seed));
    CaseResult { seed, instance: spec, mismatches }
}

/// Runs every seed, in parallel when `jobs` allows; failures come back in seed order.
pub fn verify(config: &VerifyConfig) -> Summary {
    let run = || -> Vec<CaseResult> { config.seeds.clone().into_par_iter().map(|s| check_seed(s, config)).collect() };
    let results = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    Summary {
        cases: results.len(),
        failures: results.into_iter().filter(|r| !r.mismatches.is_empty()).collect(),
    }
}

/// Human-readable failure listing with the instance text for each seed.
pub fn describe(summary: &Summary) -> String {
    let mut out = String::new();
    for case in &summary.failures {
        out.push_str(&format!("seed {}:\n", case.seed));
        for m in &case.mismatches {
            out.push_str(&format!("  {}: expected {}, found {}\n", m.check, m.expected, m.found));
        }
        for line in write_spec(&case.instance).lines() {
            out.push_str(&format!("  | {line}\n"));
        }
    }
    let failed = summary.failures.len();
    out.push_str(&format!("{} cases, {} passed, {} failed\n", summary.cases, summary.cases - failed, failed));
    out
}
