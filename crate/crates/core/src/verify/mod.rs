//! Batch checks of the claims about `T` for one representation, assembled
//! into a deterministic JSON report.

mod epsilon;
mod separation;
mod symbolic;
mod tables;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::factory::{build_separating_set, rep_json, DedupMode, SeparatingSet};
use crate::orbit::Bounds;
use crate::rep::RepSpec;

pub use epsilon::check_epsilon;
pub use separation::{check_separation, Evaluator, PairKind};
pub use symbolic::{check_degree, check_invariance, check_projection, check_support};
pub use tables::{check_counts, formula_value, table_value, Expectation};

/// Report entries are ordered by this enum, which is alphabetical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Counts,
    Degree,
    Epsilon,
    Invariance,
    Projection,
    Separation,
    Support,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Counts,
        Check::Degree,
        Check::Epsilon,
        Check::Invariance,
        Check::Projection,
        Check::Separation,
        Check::Support,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Counts => "counts",
            Check::Degree => "degree",
            Check::Epsilon => "epsilon",
            Check::Invariance => "invariance",
            Check::Projection => "projection",
            Check::Separation => "separation",
            Check::Support => "support",
        }
    }

    /// Parses a comma-separated list, or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        if s.trim() == "all" {
            return Ok(Check::ALL.to_vec());
        }
        let mut out = s.split(',').map(|p| p.trim().parse()).collect::<Result<Vec<Check>>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational discrepancy, not a failure.
    Flagged,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: Check,
    pub status: Status,
    pub details: Value,
    pub witnesses: Vec<Value>,
    /// Wall time, only when timings are requested, so reports stay reproducible.
    pub millis: Option<u64>,
}

impl CheckReport {
    pub(crate) fn new(name: Check, failed: bool, details: Value, witnesses: Vec<Value>) -> Self {
        let status = if failed { Status::Fail } else { Status::Pass };
        CheckReport { name, status, details, witnesses, millis: None }
    }
}

/// At most this many witnesses are kept per check.
pub const MAX_WITNESSES: usize = 10;

pub(crate) fn push_witness(witnesses: &mut Vec<Value>, w: Value) {
    if witnesses.len() < MAX_WITNESSES {
        witnesses.push(w);
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub checks: Vec<Check>,
    /// Random pairs for `separation` and random points for `epsilon`.
    pub trials: usize,
    pub seed: u64,
    pub bounds: Bounds,
    pub dedup: DedupMode,
    pub exec: Execution,
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            checks: Check::ALL.to_vec(),
            trials: 500,
            seed: 42,
            bounds: Bounds::default(),
            dedup: DedupMode::Scalar,
            exec: Execution::default(),
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub rep: Value,
    pub seed: u64,
    pub trials: usize,
    pub bounds: Bounds,
    pub dedup: DedupMode,
    pub size: usize,
    pub checks: Vec<CheckReport>,
}

impl Report {
    /// No check failed. Flagged checks count as passing.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: Check) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn run_check(set: &SeparatingSet, check: Check, config: &VerifyConfig) -> Result<CheckReport> {
    let start = Instant::now();
    let mut report = match check {
        Check::Counts => check_counts(set),
        Check::Degree => check_degree(set),
        Check::Epsilon => check_epsilon(&set.rep, config.trials, config.seed, config.bounds, config.exec)?,
        Check::Invariance => check_invariance(set),
        Check::Projection => check_projection(set)?,
        Check::Separation => check_separation(set, config.trials, config.seed, config.bounds, config.exec)?,
        Check::Support => check_support(set),
    };
    if config.timings {
        report.millis = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// Builds `T` under `config.dedup` and runs the selected checks in name order.
pub fn verify(rep: &RepSpec, config: &VerifyConfig) -> Result<Report> {
    let set = build_separating_set(rep, config.dedup, config.exec)?;
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    let checks = checks.into_iter().map(|c| run_check(&set, c, config)).collect::<Result<Vec<_>>>()?;
    Ok(Report {
        rep: rep_json(rep),
        seed: config.seed,
        trials: config.trials,
        bounds: config.bounds,
        dedup: config.dedup,
        size: set.len(),
        checks,
    })
}
