//! Scenario-driven verification harness for `eqkk-core`.
//!
//! A [`Scenario`] names a scalar ring, a finite group, an optional subgroup
//! with a coset section, and a list of algebras. [`verify`] builds them,
//! runs the checks of the selected suite concurrently and assembles a
//! [`Report`] whose records are sorted canonically, so two runs with the
//! same scenario and seed serialize to identical bytes.

pub mod builtin;
pub mod report;
pub mod scenario;
mod suites;

use std::fmt;
use std::str::FromStr;

pub use report::{Record, Report, Status, Summary};
pub use scenario::{resolve, Resolution, Resolved, Scenario};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("bad scenario at {path}: {message}")]
    BadScenario { path: String, message: String },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Axioms,
    Stability,
    Homotopy,
    Classify,
    GreenJulg,
    IndRes,
    BaajSkandalis,
    All,
}

impl Suite {
    pub const CONCRETE: [Suite; 7] = [
        Suite::Axioms,
        Suite::Stability,
        Suite::Homotopy,
        Suite::Classify,
        Suite::GreenJulg,
        Suite::IndRes,
        Suite::BaajSkandalis,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Stability => "stability",
            Suite::Homotopy => "homotopy",
            Suite::Classify => "classify",
            Suite::GreenJulg => "green-julg",
            Suite::IndRes => "ind-res",
            Suite::BaajSkandalis => "baaj-skandalis",
            Suite::All => "all",
        }
    }

    /// The concrete suites this selection runs.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::CONCRETE.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Suite, HarnessError> {
        Suite::CONCRETE
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| HarnessError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub suite: Suite,
    /// Overrides the scenario's truncation degree.
    pub truncation: Option<usize>,
    /// Overrides the scenario's seed.
    pub seed: Option<u64>,
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { suite: Suite::All, truncation: None, seed: None, jobs: 1 }
    }
}

/// Builds the scenario and runs the selected suite.
pub fn verify(scenario: &Scenario, options: &RunOptions) -> Result<Report, HarnessError> {
    let mut scenario = scenario.clone();
    if let Some(n) = options.truncation {
        scenario.truncation = n;
    }
    if let Some(seed) = options.seed {
        scenario.seed = seed;
    }
    let resolution = resolve(&scenario)?;
    let records = match &resolution {
        Resolution::BrokenGroup(err) => vec![Record::from_error(
            options.suite.expand()[0],
            "group/table",
            "scenario group".to_string(),
            err,
        )],
        Resolution::Ready(resolved) => {
            let checks = suites::collect(&scenario, resolved, options.suite);
            suites::execute(checks, options.jobs.max(1), &scenario.expected_failures)?
        }
    };
    Ok(Report::assemble(&scenario, options.suite, &resolution, records))
}
