use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::checks;
use crate::error::{Error, Result};
use crate::report::{SlackTracker, VerificationReport};
use crate::torus::DEFAULT_KERCKHOFF_BOUND;

/// Tolerance for identities that hold up to rounding.
pub const TOL_EXACT: f64 = 1e-12;
/// Tolerance for closed-form comparisons.
pub const TOL_CLOSED_FORM: f64 = 1e-9;
/// Tolerance for finite-difference comparisons.
pub const TOL_FD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    ClosedForms,
    Levi,
    Gardiner,
    StrongPositivity,
    LogPsh,
    Reciprocal,
    Distance,
    Kerckhoff,
    Horoball,
    Currents,
    Duality,
    Minsky,
    Periods,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::ClosedForms,
        Suite::Levi,
        Suite::Gardiner,
        Suite::StrongPositivity,
        Suite::LogPsh,
        Suite::Reciprocal,
        Suite::Distance,
        Suite::Kerckhoff,
        Suite::Horoball,
        Suite::Currents,
        Suite::Duality,
        Suite::Minsky,
        Suite::Periods,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ClosedForms => "closed-forms",
            Suite::Levi => "levi",
            Suite::Gardiner => "gardiner",
            Suite::StrongPositivity => "strong-positivity",
            Suite::LogPsh => "log-psh",
            Suite::Reciprocal => "reciprocal",
            Suite::Distance => "distance",
            Suite::Kerckhoff => "kerckhoff",
            Suite::Horoball => "horoball",
            Suite::Currents => "currents",
            Suite::Duality => "duality",
            Suite::Minsky => "minsky",
            Suite::Periods => "periods",
        }
    }

    /// Sample count used when the configuration does not override it.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::ClosedForms => 1,
            Suite::Levi | Suite::Minsky => 10_000,
            Suite::LogPsh | Suite::Reciprocal | Suite::Currents | Suite::Periods => 100,
            Suite::Gardiner
            | Suite::StrongPositivity
            | Suite::Distance
            | Suite::Kerckhoff
            | Suite::Horoball
            | Suite::Duality => 1000,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Parameters shared by every suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides each suite's default sample count.
    pub samples: Option<usize>,
    /// Overrides every check's default tolerance.
    pub tol: Option<f64>,
    /// Relative finite-difference step. Below about `1e-3` rounding in the
    /// five-point stencil outgrows the truncation error.
    pub h: f64,
    pub bound: u32,
    /// Side length of the τ-plane grid.
    pub grid: usize,
    /// Side length of the per-disk λ grid.
    pub disk_grid: usize,
    pub circle_nodes: usize,
    pub rays: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: None,
            tol: None,
            h: 1e-3,
            bound: DEFAULT_KERCKHOFF_BOUND,
            grid: 50,
            disk_grid: 5,
            circle_nodes: 64,
            rays: 512,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidArgument(what.to_string()));
        if !(self.h > 0.0 && self.h < 0.1) {
            return bad("h must lie in (0, 0.1)");
        }
        if let Some(t) = self.tol {
            if !(t >= 0.0 && t.is_finite()) {
                return bad("tolerance must be finite and nonnegative");
            }
        }
        if self.samples == Some(0) || self.grid == 0 || self.disk_grid == 0 {
            return bad("sample and grid counts must be positive");
        }
        if self.bound < 1 {
            return bad("bound must be at least 1");
        }
        if self.circle_nodes < 64 {
            return bad("circle quadrature needs at least 64 nodes");
        }
        if self.rays == 0 {
            return bad("ray count must be positive");
        }
        Ok(())
    }

    pub(crate) fn samples_for(&self, suite: Suite) -> usize {
        self.samples.unwrap_or_else(|| suite.default_samples())
    }

    pub(crate) fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    pub(crate) fn tracker(&self, suite: Suite, check: &str, default_tol: f64) -> SlackTracker {
        SlackTracker::new(format!("{suite}/{check}"), self.tol.unwrap_or(default_tol)).with_seed(self.seed)
    }
}

/// Runs one suite; every suite draws from its own generator seeded with
/// `config.seed`, so results do not depend on which other suites run.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    config.validate()?;
    match suite {
        Suite::ClosedForms => checks::closed_forms_suite(config),
        Suite::Levi => checks::levi_suite(config),
        Suite::Gardiner => checks::gardiner_suite(config),
        Suite::StrongPositivity => checks::strong_positivity_suite(config),
        Suite::LogPsh => checks::log_psh_suite(config),
        Suite::Reciprocal => checks::reciprocal_suite(config),
        Suite::Distance => checks::distance_suite(config),
        Suite::Kerckhoff => checks::kerckhoff_suite(config),
        Suite::Horoball => checks::horoball_suite(config),
        Suite::Currents => checks::currents_suite(config),
        Suite::Duality => checks::duality_suite(config),
        Suite::Minsky => checks::minsky_suite(config),
        Suite::Periods => checks::periods_suite(config),
    }
}
