//! Check reports and the labels used inside them.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::algebra::QParam;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub max_order: usize,
    pub q_values: Vec<QParam>,
}

/// An offending input together with the term that breaks the law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub law: String,
    pub inputs: Vec<String>,
    pub term: String,
}

impl Counterexample {
    pub fn new(law: impl Into<String>, inputs: Vec<String>, term: impl Into<String>) -> Self {
        Counterexample { law: law.into(), inputs, term: term.into() }
    }
}

/// Outcome of a suite. A report fails iff it or a nested report holds a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub parameters: Parameters,
    pub status: Status,
    /// Number of individual cases examined.
    pub cases: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Failures that are claimed to occur and were observed.
    pub reproduced: Vec<Counterexample>,
    pub note: String,
    pub reports: Vec<CheckReport>,
}

pub const TRUNCATION_NOTE: &str =
    "checked on the finite truncation by diagram order; closure failures and containments found here are genuine, passes certify only the truncation";

impl CheckReport {
    pub fn new(suite: impl Into<String>, max_order: usize, q_values: Vec<QParam>) -> Self {
        CheckReport {
            suite: suite.into(),
            parameters: Parameters { max_order, q_values },
            status: Status::Pass,
            cases: 0,
            counterexamples: Vec::new(),
            reproduced: Vec::new(),
            note: TRUNCATION_NOTE.to_string(),
            reports: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, c: Counterexample) {
        self.counterexamples.push(c);
        self.status = Status::Fail;
    }

    /// Records one case, failing with `c` unless `ok`.
    pub fn expect(&mut self, ok: bool, c: impl FnOnce() -> Counterexample) {
        self.case();
        if !ok {
            self.fail(c());
        }
    }

    pub fn absorb(&mut self, child: CheckReport) {
        self.cases += child.cases;
        if !child.passed() {
            self.status = Status::Fail;
        }
        self.reports.push(child);
    }

    /// Every counterexample in this report and its nested reports.
    pub fn all_counterexamples(&self) -> Vec<&Counterexample> {
        let mut out: Vec<&Counterexample> = self.counterexamples.iter().collect();
        for r in &self.reports {
            out.extend(r.all_counterexamples());
        }
        out
    }

    /// Counterexamples per law.
    pub fn violations(&self) -> BTreeMap<&str, usize> {
        let mut out = BTreeMap::new();
        for c in &self.counterexamples {
            *out.entry(c.law.as_str()).or_insert(0) += 1;
        }
        out
    }

    pub fn law_passes(&self, law: &str) -> bool {
        !self.counterexamples.iter().any(|c| c.law == law)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `M_[[1],[-1]]` and the like.
pub fn label(prefix: &str, key: &impl Display) -> String {
    format!("{prefix}_{key}")
}

pub fn label2(prefix: &str, a: &impl Display, b: &impl Display) -> String {
    format!("{} ⊗ {}", label(prefix, a), label(prefix, b))
}

pub fn show<T: std::fmt::Debug>(x: &T) -> String {
    format!("{x:?}")
}
