//! Verification report: every check record plus summary blocks.

use std::collections::BTreeMap;

use serde::Serialize;
use skewlab_core::CheckResult;

/// One check as written to the report.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckRecord {
    pub relation: String,
    pub sample: u64,
    pub dim: usize,
    pub alpha: f64,
    pub beta: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub tol: f64,
    pub holds: bool,
    /// FNV-1a digest of the inputs, hex encoded.
    pub inputs_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckRecord {
    pub fn from_check(c: &CheckResult, sample: u64, dim: usize, alpha: f64, beta: f64) -> Self {
        Self {
            relation: c.name().to_owned(),
            sample,
            dim,
            alpha,
            beta,
            lhs: c.lhs,
            rhs: c.rhs,
            slack: c.slack,
            tol: c.tol,
            holds: c.holds,
            inputs_digest: format!("{:016x}", c.inputs_digest),
            error: None,
        }
    }

    /// A check that could not be evaluated at all; always counts as failed.
    pub fn failed(
        relation: &str,
        sample: u64,
        dim: usize,
        alpha: f64,
        beta: f64,
        error: String,
    ) -> Self {
        Self {
            relation: relation.to_owned(),
            sample,
            dim,
            alpha,
            beta,
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            tol: 0.0,
            holds: false,
            inputs_digest: String::new(),
            error: Some(error),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    /// Smallest `slack` seen, `null` when nothing finite was recorded.
    pub worst_slack: Option<f64>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RelationSummary {
    pub relation: String,
    pub total: usize,
    pub passed: usize,
    pub worst_slack: Option<f64>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
    pub relations: Vec<RelationSummary>,
    pub summary: Summary,
}

fn fold_worst(acc: Option<f64>, slack: f64) -> Option<f64> {
    if !slack.is_finite() {
        return acc;
    }
    Some(acc.map_or(slack, |w| w.min(slack)))
}

impl Report {
    pub fn new(checks: Vec<CheckRecord>, seed: u64) -> Self {
        let mut by_relation: BTreeMap<&str, RelationSummary> = BTreeMap::new();
        for c in &checks {
            let entry = by_relation
                .entry(c.relation.as_str())
                .or_insert_with(|| RelationSummary {
                    relation: c.relation.clone(),
                    total: 0,
                    passed: 0,
                    worst_slack: None,
                });
            entry.total += 1;
            entry.passed += usize::from(c.holds);
            entry.worst_slack = fold_worst(entry.worst_slack, c.slack);
        }
        let summary = Summary {
            total: checks.len(),
            passed: checks.iter().filter(|c| c.holds).count(),
            worst_slack: checks.iter().fold(None, |w, c| fold_worst(w, c.slack)),
            seed,
        };
        Self {
            relations: by_relation.into_values().collect(),
            checks,
            summary,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes") + "\n"
    }
}
