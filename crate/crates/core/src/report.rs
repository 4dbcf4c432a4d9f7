//! Outcome of a numerical property check.

use serde::{Deserialize, Serialize};

/// Result of one property check.
///
/// Every check is phrased as a family of slacks that must be nonnegative;
/// error-style checks record `-error`. The check passes iff the minimum
/// slack is at least `-tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub samples: usize,
    /// Non-finite values (an empty or NaN-tainted check) serialize as `null`.
    #[serde(with = "finite_or_null")]
    pub min_slack: f64,
    pub tolerance: f64,
    /// Sample at which the minimum slack was attained.
    pub witness: Option<String>,
    pub pass: bool,
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn summary_line(&self) -> String {
        format!(
            "{} {} samples={} min_slack={:e} tol={:e}{}",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.samples,
            self.min_slack + 0.0, // turns -0 into 0
            self.tolerance,
            self.witness.as_ref().map(|w| format!(" at {w}")).unwrap_or_default()
        )
    }
}

mod finite_or_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            s.serialize_f64(*x)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

/// Running minimum with first-index tie-break.
#[derive(Debug, Clone)]
pub struct SlackTracker {
    check: String,
    tolerance: f64,
    seed: Option<u64>,
    samples: usize,
    min: f64,
    witness: Option<String>,
    saw_nan: bool,
}

impl SlackTracker {
    pub fn new(check: impl Into<String>, tolerance: f64) -> Self {
        Self {
            check: check.into(),
            tolerance,
            seed: None,
            samples: 0,
            min: f64::INFINITY,
            witness: None,
            saw_nan: false,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Records one slack; `witness` is only formatted when it becomes the new minimum.
    pub fn record(&mut self, slack: f64, witness: impl FnOnce() -> String) {
        self.samples += 1;
        if slack.is_nan() {
            if !self.saw_nan {
                self.saw_nan = true;
                self.witness = Some(format!("NaN at {}", witness()));
            }
            return;
        }
        if !self.saw_nan && slack < self.min {
            self.min = slack;
            self.witness = Some(witness());
        }
    }

    /// Records the negated error, so the check passes iff `error <= tolerance`.
    pub fn record_error(&mut self, error: f64, witness: impl FnOnce() -> String) {
        self.record(-error, witness);
    }

    pub fn merge(&mut self, other: SlackTracker) {
        self.samples += other.samples;
        if other.saw_nan && !self.saw_nan {
            self.saw_nan = true;
            self.witness = other.witness;
        } else if !self.saw_nan && other.min < self.min {
            self.min = other.min;
            self.witness = other.witness;
        }
    }

    pub fn finish(self) -> VerificationReport {
        let min_slack = if self.saw_nan { f64::NAN } else { self.min };
        let pass = !self.saw_nan && self.samples > 0 && min_slack >= -self.tolerance;
        VerificationReport {
            check: self.check,
            samples: self.samples,
            min_slack,
            tolerance: self.tolerance,
            witness: self.witness,
            pass,
            seed: self.seed,
        }
    }
}
