//! Verification records and the JSON report.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::scenario::{Resolution, Scenario};
use crate::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A failure the scenario declares in `expected_failures`.
    Expected,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub suite: String,
    pub anchor: String,
    pub instance: String,
    pub status: Status,
    /// Error kind of a failed construction, e.g. `OrderNotInvertible`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Record {
    pub fn from_error(suite: Suite, anchor: &str, instance: String, err: &eqkk_core::Error) -> Record {
        Record {
            suite: suite.as_str().to_string(),
            anchor: anchor.to_string(),
            instance,
            status: Status::Fail,
            kind: Some(err.kind().to_string()),
            witness: Some(err.to_string()),
            detail: None,
        }
    }

    fn sort_key(&self) -> (&str, &str, &str) {
        (&self.suite, &self.anchor, &self.instance)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub expected: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetRow {
    pub label: String,
    pub representative: String,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub artifact: String,
    pub version: String,
    pub scenario: String,
    pub suite: String,
    pub truncation: usize,
    pub seed: u64,
    pub pair_limit: usize,
    pub triple_limit: usize,
    pub samples: usize,
    /// SHA-256 of the canonical scenario JSON.
    pub input_digest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cosets: Option<Vec<CosetRow>>,
    pub summary: Summary,
    pub records: Vec<Record>,
}

pub fn digest(scenario: &Scenario) -> String {
    let canonical = serde_json::to_string(scenario).expect("scenario serializes");
    let hash = Sha256::digest(canonical.as_bytes());
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

impl Report {
    pub(crate) fn assemble(
        scenario: &Scenario,
        suite: Suite,
        resolution: &Resolution,
        mut records: Vec<Record>,
    ) -> Report {
        records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut summary = Summary { total: records.len(), ..Summary::default() };
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Expected => summary.expected += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        let cosets = match resolution {
            Resolution::Ready(r) => r.cosets.as_ref().map(|space| {
                let g = space.parent();
                (0..space.len())
                    .map(|c| CosetRow {
                        label: space.label(c),
                        representative: g.name(space.rep(c)).to_string(),
                        members: space.cosets()[c].iter().map(|&x| g.name(x).to_string()).collect(),
                    })
                    .collect()
            }),
            Resolution::BrokenGroup(_) => None,
        };
        let budget = scenario.budget(scenario.seed);
        Report {
            artifact: "eqkk".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            scenario: scenario.name.clone(),
            suite: suite.as_str().to_string(),
            truncation: scenario.truncation,
            seed: scenario.seed,
            pair_limit: budget.pair_limit,
            triple_limit: budget.triple_limit,
            samples: budget.samples,
            input_digest: digest(scenario),
            cosets,
            summary,
            records,
        }
    }

    /// No failures beyond the declared ones.
    pub fn is_success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }
}
