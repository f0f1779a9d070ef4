//! Structured frequency reports shared by all harnesses.
//!
//! A harness turns a probabilistic claim into a counted event over seeded
//! trials. Reports serialize to JSON in full and to a one-row CSV summary;
//! identical configuration and master seed produce byte-identical output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::Result;

/// Verdict of one harness run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckOutcome {
    Pass,
    Fail,
    /// A precondition failed, so the claim was not exercised.
    NotApplicable,
}

impl CheckOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckOutcome::Pass => "PASS",
            CheckOutcome::Fail => "FAIL",
            CheckOutcome::NotApplicable => "NOT-APPLICABLE",
        }
    }
}

/// Whether the frequency must stay at or below the threshold (violation
/// counts) or reach at least the threshold (demonstration successes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrequencyDirection {
    AtMost,
    AtLeast,
}

/// The hypothesis/objective pair behind a trial's worst margin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationWitness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_hypothesis: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalarization: Option<usize>,
    pub margin: f64,
}

/// Per-trial record; replaying the trial seed reproduces every field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub trial: usize,
    pub seed: u64,
    /// Violation flag (or success flag for demonstrations): true iff the
    /// checked inequality fails by more than the numeric tolerance.
    pub event: bool,
    /// Largest observed left-minus-right slack across all checks in the
    /// trial; negative when everything held.
    pub worst_margin: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub empirical_pareto: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ViolationWitness>,
    /// Empirically Pareto-optimal (jump count, error count) pairs of a
    /// segmentation trial.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub front_pairs: Option<Vec<(usize, usize)>>,
}

/// Aggregated harness outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencyReport {
    pub harness: String,
    pub trials: usize,
    /// Counted events: violations, or successes for demonstrations.
    pub violations: usize,
    pub frequency: f64,
    /// Pass threshold (a ceiling for `AtMost`, a floor for `AtLeast`).
    pub ceiling: f64,
    pub direction: FrequencyDirection,
    pub outcome: CheckOutcome,
    pub master_seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub term_values: Option<Vec<f64>>,
    /// Harness-specific scalars (ray completeness fraction, sweep size, ...).
    pub notes: BTreeMap<String, serde_json::Value>,
    pub trial_reports: Vec<TrialReport>,
}

impl FrequencyReport {
    /// Assemble the aggregate from per-trial records.
    #[allow(clippy::too_many_arguments)]
    pub fn from_trials(
        harness: impl Into<String>,
        master_seed: u64,
        delta: Option<f64>,
        term_values: Option<Vec<f64>>,
        ceiling: f64,
        direction: FrequencyDirection,
        trial_reports: Vec<TrialReport>,
    ) -> Self {
        let trials = trial_reports.len();
        let violations = trial_reports.iter().filter(|t| t.event).count();
        let frequency = if trials == 0 {
            0.0
        } else {
            violations as f64 / trials as f64
        };
        let pass = match direction {
            FrequencyDirection::AtMost => frequency <= ceiling,
            FrequencyDirection::AtLeast => frequency >= ceiling,
        };
        FrequencyReport {
            harness: harness.into(),
            trials,
            violations,
            frequency,
            ceiling,
            direction,
            outcome: if pass { CheckOutcome::Pass } else { CheckOutcome::Fail },
            master_seed,
            delta,
            term_values,
            notes: BTreeMap::new(),
            trial_reports,
        }
    }

    pub fn with_note(mut self, key: &str, value: impl Serialize) -> Self {
        self.notes.insert(
            key.to_string(),
            serde_json::to_value(value).expect("note serializes"),
        );
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.outcome, CheckOutcome::Pass | CheckOutcome::NotApplicable)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Summary rows: harness, trials, violations, frequency, ceiling, status.
    pub fn summary_csv(&self) -> String {
        format!(
            "harness,trials,violations,frequency,ceiling,status\n{},{},{},{},{},{}\n",
            self.harness,
            self.trials,
            self.violations,
            self.frequency,
            self.ceiling,
            self.outcome.as_str()
        )
    }

    /// One human-readable pass/fail line.
    pub fn summary_line(&self) -> String {
        let relation = match self.direction {
            FrequencyDirection::AtMost => "<=",
            FrequencyDirection::AtLeast => ">=",
        };
        format!(
            "{} {}: frequency {:.4} {} {:.4} ({}/{} trials)",
            self.outcome.as_str(),
            self.harness,
            self.frequency,
            relation,
            self.ceiling,
            self.violations,
            self.trials
        )
    }
}

/// Pass ceiling for a claimed failure probability `delta` observed over
/// finitely many trials: `delta + 2 sqrt(delta (1 - delta) / trials)`,
/// two binomial standard deviations of slack.
pub fn binomial_ceiling(delta: f64, trials: usize) -> f64 {
    delta + 2.0 * (delta * (1.0 - delta) / trials.max(1) as f64).sqrt()
}
