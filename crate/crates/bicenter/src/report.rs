//! Solve reports in text and JSON.
//!
//! JSON schema:
//! `{"lambda": {"num", "den"}, "q1": {"u", "v", "t": {"num", "den"}}, "q2": …,
//! "assignment": [{"q1": vertex, "q2": vertex}, …], "solver": "graph" | "tree" | "tree-unweighted"}`.
//! Offsets `t` are measured from `u`, the lower endpoint.

use std::fmt::Write as _;
use std::str::FromStr;

use bicenter_core::{EdgePoint, Instance, Orientation, Scalar, Solution, SolverKind};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

/// Significant digits of the display-only decimal rendering.
pub const DECIMAL_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: Number,
    pub den: Number,
}

impl Rational {
    pub fn from_scalar(s: &Scalar) -> Self {
        let number = |b: BigInt| Number::from_str(&b.to_string()).expect("integer is a JSON number");
        Rational { num: number(s.numer()), den: number(s.denom()) }
    }

    pub fn to_scalar(&self) -> Result<Scalar, ReportError> {
        let int = |n: &Number| BigInt::from_str(&n.to_string()).map_err(|_| ReportError::NotInteger(n.to_string()));
        let den = int(&self.den)?;
        if den == BigInt::from(0) {
            return Err(ReportError::ZeroDenominator);
        }
        Ok(Scalar::from_bigints(int(&self.num)?, den))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointReport {
    pub u: usize,
    pub v: usize,
    pub t: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub q1: usize,
    pub q2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub lambda: Rational,
    pub q1: PointReport,
    pub q2: PointReport,
    pub assignment: Vec<PairReport>,
    pub solver: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("`{0}` is not an integer")]
    NotInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("offset {t} is outside edge ({u}, {v})")]
    OffsetOutOfRange { u: usize, v: usize, t: Scalar },
    #[error("assignment has {found} entries for {expected} pairs")]
    AssignmentLength { expected: usize, found: usize },
    #[error("assignment entry {0} does not match the pair")]
    AssignmentMismatch(usize),
}

fn point_report(instance: &Instance, p: &EdgePoint) -> PointReport {
    let edge = instance.edge(p.edge);
    if edge.u < edge.v {
        PointReport { u: edge.u, v: edge.v, t: Rational::from_scalar(&p.t) }
    } else {
        PointReport { u: edge.v, v: edge.u, t: Rational::from_scalar(&(&edge.length - &p.t)) }
    }
}

fn point_from_report(instance: &Instance, r: &PointReport) -> Result<EdgePoint, ReportError> {
    let t = r.t.to_scalar()?;
    let e = instance
        .incident(r.u)
        .iter()
        .copied()
        .find(|&e| instance.edge(e).other(r.u) == r.v)
        .ok_or(ReportError::NoSuchEdge(r.u, r.v))?;
    let edge = instance.edge(e);
    if t.is_negative() || t > edge.length {
        return Err(ReportError::OffsetOutOfRange { u: r.u, v: r.v, t });
    }
    let t = if edge.u == r.u { t } else { &edge.length - &t };
    Ok(EdgePoint { edge: e, t })
}

impl Report {
    pub fn new(instance: &Instance, solution: &Solution, solver: SolverKind) -> Self {
        let assignment = instance
            .pairs()
            .iter()
            .zip(&solution.assignment)
            .map(|(p, o)| match o {
                Orientation::Forward => PairReport { q1: p.v, q2: p.u },
                Orientation::Reverse => PairReport { q1: p.u, q2: p.v },
            })
            .collect();
        Report {
            lambda: Rational::from_scalar(&solution.lambda),
            q1: point_report(instance, &solution.q1),
            q2: point_report(instance, &solution.q2),
            assignment,
            solver: solver.name().to_string(),
        }
    }

    /// Reads the report back as a solution of `instance`.
    pub fn to_solution(&self, instance: &Instance) -> Result<Solution, ReportError> {
        if self.assignment.len() != instance.pair_count() {
            return Err(ReportError::AssignmentLength { expected: instance.pair_count(), found: self.assignment.len() });
        }
        let assignment = instance
            .pairs()
            .iter()
            .zip(&self.assignment)
            .enumerate()
            .map(|(i, (p, a))| match (a.q1, a.q2) {
                (x, y) if (x, y) == (p.v, p.u) => Ok(Orientation::Forward),
                (x, y) if (x, y) == (p.u, p.v) => Ok(Orientation::Reverse),
                _ => Err(ReportError::AssignmentMismatch(i)),
            })
            .collect::<Result<_, _>>()?;
        Ok(Solution {
            lambda: self.lambda.to_scalar()?,
            q1: point_from_report(instance, &self.q1)?,
            q2: point_from_report(instance, &self.q2)?,
            assignment,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let lambda = self.lambda.to_scalar().expect("built from a scalar");
        let point = |p: &PointReport| {
            let t = p.t.to_scalar().expect("built from a scalar");
            format!("edge ({}, {}) at offset {} from {}", p.u, p.v, t, p.u)
        };
        let mut out = String::new();
        writeln!(out, "solver: {}", self.solver).unwrap();
        writeln!(out, "lambda: {} ~ {}", lambda, lambda.to_decimal(DECIMAL_DIGITS)).unwrap();
        writeln!(out, "q1: {}", point(&self.q1)).unwrap();
        writeln!(out, "q2: {}", point(&self.q2)).unwrap();
        for (i, a) in self.assignment.iter().enumerate() {
            writeln!(out, "pair {i}: {} -> q1, {} -> q2", a.q1, a.q2).unwrap();
        }
        out
    }
}
