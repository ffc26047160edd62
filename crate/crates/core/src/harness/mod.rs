//! Check registry, suites and JSON reports.

mod checks;

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fieldpoly::FieldSpec;
use crate::orbits::Partition;

pub use checks::CheckOutcome;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid parameters for `{check}`: {message}")]
    InvalidParameters { check: String, message: String },
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

/// Named parameters of a check. Absent values take the check's default.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timeout_secs: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
}

impl CheckParams {
    fn present(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let flags = [
            ("n", self.n.is_some()),
            ("e", self.e.is_some()),
            ("a", self.a.is_some()),
            ("b", self.b.is_some()),
            ("field", self.field.is_some()),
            ("seed", self.seed.is_some()),
            ("trials", self.trials.is_some()),
            ("timeout_secs", self.timeout_secs.is_some()),
            ("order", self.order.is_some()),
            ("partition", self.partition.is_some()),
            ("degree", self.degree.is_some()),
        ];
        for (name, set) in flags {
            if set {
                out.push(name);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSpec {
    pub name: String,
    #[serde(default)]
    pub params: CheckParams,
}

impl CheckSpec {
    pub fn new(name: &str, params: CheckParams) -> Self {
        CheckSpec { name: name.to_string(), params }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Timeout,
    Inconclusive,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Timeout => "timeout",
            Status::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: CheckParams,
    pub field: String,
    pub status: Status,
    pub witness: String,
    pub elapsed_ms: u64,
    pub seed: u64,
}

impl Report {
    /// One-line human summary.
    pub fn summary(&self) -> String {
        let params = serde_json::to_string(&self.params).unwrap_or_default();
        format!(
            "{:<12} {} {} [{}] {} ({} ms)",
            self.status, self.check, params, self.field, self.witness, self.elapsed_ms
        )
    }
}

/// A registered check.
pub struct CheckInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub params: &'static [&'static str],
    pub default_field: FieldSpec,
    run: fn(&CheckParams, FieldSpec, u64) -> Result<CheckOutcome, String>,
}

pub fn registry() -> &'static [CheckInfo] {
    checks::REGISTRY
}

pub fn find_check(name: &str) -> Result<&'static CheckInfo, HarnessError> {
    registry().iter().find(|c| c.name == name).ok_or_else(|| HarnessError::UnknownCheck(name.to_string()))
}

/// Run one check. Deterministic in `(name, params, seed)`.
pub fn run_check(spec: &CheckSpec) -> Result<Report, HarnessError> {
    let info = find_check(&spec.name)?;
    let invalid = |message: String| HarnessError::InvalidParameters { check: spec.name.clone(), message };
    for p in spec.params.present() {
        if p != "seed" && !info.params.contains(&p) {
            return Err(invalid(format!("parameter `{p}` is not accepted (accepted: {})", info.params.join(", "))));
        }
    }
    let field = spec.params.field.unwrap_or(info.default_field);
    let seed = spec.params.seed.unwrap_or(0);
    let start = Instant::now();
    let outcome = (info.run)(&spec.params, field, seed).map_err(invalid)?;
    Ok(Report {
        check: spec.name.clone(),
        params: spec.params.clone(),
        field: field.to_string(),
        status: outcome.status,
        witness: outcome.witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
        seed,
    })
}

pub const SUITES: &[&str] = &["core", "reducedness", "surjectivity", "laurent", "all"];

/// The default grid of a suite.
pub fn suite_specs(name: &str) -> Result<Vec<CheckSpec>, HarnessError> {
    checks::suite(name).ok_or_else(|| HarnessError::UnknownSuite(name.to_string()))
}

/// Run a named suite on its default grid.
pub fn run_suite(name: &str) -> Result<Vec<Report>, HarnessError> {
    Ok(run_specs(&suite_specs(name)?))
}

/// Run checks concurrently. A check that cannot run becomes a `fail`
/// report carrying the error; reports are ordered by check name.
pub fn run_specs(specs: &[CheckSpec]) -> Vec<Report> {
    let mut reports: Vec<Report> = specs
        .par_iter()
        .map(|spec| {
            run_check(spec).unwrap_or_else(|err| Report {
                check: spec.name.clone(),
                params: spec.params.clone(),
                field: spec.params.field.map(|f| f.to_string()).unwrap_or_default(),
                status: Status::Fail,
                witness: err.to_string(),
                elapsed_ms: 0,
                seed: spec.params.seed.unwrap_or(0),
            })
        })
        .collect();
    reports.sort_by(|a, b| a.check.cmp(&b.check));
    reports
}

/// Write reports as a JSON array.
pub fn emit_report(reports: &[Report], path: &Path) -> Result<(), HarnessError> {
    let mut text = serde_json::to_string_pretty(reports)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// True iff no report failed.
pub fn all_ok(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}
