//! Machine-readable run reports.
//!
//! One JSON document per run:
//!
//! ```json
//! {
//!   "schema": "akivis-report/1",
//!   "command": "check",
//!   "algebra": { "name": "octonions", "kind": "product-table", "even": 4, "odd": 4 },
//!   "status": "fail",
//!   "checks": [
//!     {
//!       "identity": "lie",
//!       "status": "fail",
//!       "checked": 1024,
//!       "failures": 130,
//!       "witnesses": [
//!         { "relation": "A", "args": ["1 e1", "1 e2", "1 e4"], "lhs": "...", "rhs": "0" }
//!       ]
//!     }
//!   ]
//! }
//! ```
//!
//! Elements are written in their canonical text form. Field order is fixed
//! and there are no timestamps, so repeated runs produce identical bytes.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::basis::GradedBasis;
use crate::identity::{CheckReport, Render, Status};

pub const SCHEMA: &str = "akivis-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub kind: String,
    pub even: usize,
    pub odd: usize,
}

impl AlgebraSummary {
    pub fn of(name: &str, algebra: &Algebra) -> Self {
        let basis = algebra.basis();
        AlgebraSummary {
            name: name.to_string(),
            kind: algebra.kind().keyword().to_string(),
            even: basis.even_dim(),
            odd: basis.odd_dim(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord {
    pub relation: String,
    pub args: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub identity: String,
    pub status: Status,
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<WitnessRecord>,
}

impl CheckRecord {
    pub fn from_report<V: Render>(report: &CheckReport<V>, basis: &GradedBasis) -> Self {
        CheckRecord {
            identity: report.identity.clone(),
            status: report.status(),
            checked: report.checked,
            failures: report.failures,
            witnesses: report
                .witnesses
                .iter()
                .map(|w| WitnessRecord {
                    relation: w.relation.to_string(),
                    args: w.args.iter().map(|a| a.render(basis)).collect(),
                    lhs: w.lhs.render(basis),
                    rhs: w.rhs.render(basis),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: String,
    pub algebra: AlgebraSummary,
    pub status: Status,
    pub checks: Vec<CheckRecord>,
}

impl RunReport {
    pub fn new(command: &str, algebra: AlgebraSummary, checks: Vec<CheckRecord>) -> Self {
        let status = if checks.iter().all(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        RunReport {
            schema: SCHEMA,
            command: command.to_string(),
            algebra,
            status,
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
