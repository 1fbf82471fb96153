//! Verification suites and their reports.

mod properties;
mod suites;

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::conjugacy::ClassTable;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub use properties::{coprime_action_holds, elementary_center_normalized, orbit_divisibility_holds};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub witness: Option<Value>,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub overall: Status,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn new(suite: &str, checks: Vec<Check>) -> Self {
        let overall = if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        VerificationReport {
            suite: suite.to_string(),
            overall,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with every `runtime_ms` zeroed, for comparing runs.
    pub fn without_timings(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.checks {
            c.runtime_ms = 0;
        }
        out
    }

    pub fn total_runtime_ms(&self) -> u64 {
        self.checks.iter().map(|c| c.runtime_ms).sum()
    }
}

pub(crate) struct Outcome {
    pub pass: bool,
    pub detail: String,
    pub witness: Option<Value>,
}

impl Outcome {
    pub fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }
}

pub(crate) fn run_check(id: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) -> Check {
    let start = Instant::now();
    let result = f();
    let runtime_ms = start.elapsed().as_millis() as u64;
    let id = id.into();
    match result {
        Ok(o) => Check {
            id,
            status: if o.pass { Status::Pass } else { Status::Fail },
            detail: o.detail,
            witness: o.witness,
            runtime_ms,
        },
        Err(e) if e.is_resource_cap() => Check {
            id,
            status: Status::Skipped,
            detail: format!("skipped: {e}"),
            witness: None,
            runtime_ms,
        },
        Err(e) => Check {
            id,
            status: Status::Fail,
            detail: format!("error: {e}"),
            witness: None,
            runtime_ms,
        },
    }
}

/// Fails unless at least `min` checks ran to a pass or fail verdict.
pub(crate) fn coverage(suite: &str, checks: &[Check], min: usize, extra: &str) -> Check {
    let executed = checks.iter().filter(|c| c.status != Status::Skipped).count();
    let skipped = checks.len() - executed;
    Check {
        id: format!("{suite}/coverage"),
        status: if executed >= min {
            Status::Pass
        } else {
            Status::Fail
        },
        detail: format!("executed {executed} checks (minimum {min}), skipped {skipped}{extra}"),
        witness: None,
        runtime_ms: 0,
    }
}

pub const SUITES: [&str; 10] = [
    "counterexample_p2",
    "starstar_s8",
    "theorem_a_small",
    "corollary_b",
    "theorem_41_solvable",
    "prop26_alt",
    "table1_mathieu",
    "theorem_c_catalog",
    "zsigmondy_range",
    "oracle_crosschecks",
];

pub fn run_suite(name: &str) -> Result<VerificationReport> {
    let checks = match name {
        "counterexample_p2" => suites::counterexample_p2(),
        "starstar_s8" => suites::starstar_s8(),
        "theorem_a_small" => suites::theorem_a_small(),
        "corollary_b" => suites::corollary_b(),
        "theorem_41_solvable" => suites::theorem_41_solvable(),
        "prop26_alt" => suites::prop26_alt(),
        "table1_mathieu" => suites::table1_mathieu(),
        "theorem_c_catalog" => suites::theorem_c_catalog(),
        "zsigmondy_range" => suites::zsigmondy_range(),
        "oracle_crosschecks" => suites::oracle_crosschecks(),
        _ => return Err(Error::UnknownSuite(name.to_string())),
    }?;
    Ok(VerificationReport::new(name, checks))
}

pub(crate) fn cyclic_subgroup_reps(
    table: &ClassTable,
    keep: impl Fn(u64) -> bool,
) -> Vec<Permutation> {
    table.cyclic_subgroup_representatives(keep).into_iter().map(|(_, x)| x).collect()
}

pub(crate) fn order_p_reps(g: &PermGroup, p: u64) -> Result<Vec<Permutation>> {
    Ok(cyclic_subgroup_reps(&ClassTable::new(g)?, |k| k == p))
}
