//! Pass/fail records for identity checks, with text and JSON rendering.
//!
//! Every check states the identity it verifies, the residual it observed,
//! and the bound the residual was held to. Counterexample checks flip the
//! bound: they pass only when the observed deviation is large enough.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Residual must be at most the tolerance.
    AtMost,
    /// Residual must be at least the tolerance (a violation that must occur).
    AtLeast,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Entry {
    pub label: String,
    /// The mathematical statement the residual measures.
    pub identity: String,
    pub residual: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub pass: bool,
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let cmp = match self.bound {
            Bound::AtMost => "<=",
            Bound::AtLeast => ">=",
        };
        write!(
            f,
            "{status} {:<32} residual {:9.3e} {cmp} {:9.3e}  {}",
            self.label, self.residual, self.tolerance, self.identity
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Report {
        Report {
            suite: suite.into(),
            seed: None,
            trials: None,
            entries: Vec::new(),
        }
    }

    pub fn with_run(mut self, seed: u64, trials: u64) -> Report {
        self.seed = Some(seed);
        self.trials = Some(trials);
        self
    }

    /// Records a residual that must stay within `tolerance`.
    pub fn check(
        &mut self,
        label: impl Into<String>,
        identity: impl Into<String>,
        residual: f64,
        tolerance: f64,
    ) -> bool {
        let pass = residual.is_finite() && residual <= tolerance;
        self.entries.push(Entry {
            label: label.into(),
            identity: identity.into(),
            residual,
            tolerance,
            bound: Bound::AtMost,
            pass,
        });
        pass
    }

    /// Records a residual that must be exactly zero.
    pub fn check_exact(
        &mut self,
        label: impl Into<String>,
        identity: impl Into<String>,
        residual: f64,
    ) -> bool {
        self.check(label, identity, residual, 0.0)
    }

    /// Records a deviation that must be at least `floor` for the check to
    /// pass; guards that an identity genuinely fails where it should.
    pub fn check_exceeds(
        &mut self,
        label: impl Into<String>,
        identity: impl Into<String>,
        deviation: f64,
        floor: f64,
    ) -> bool {
        let pass = deviation.is_finite() && deviation >= floor;
        self.entries.push(Entry {
            label: label.into(),
            identity: identity.into(),
            residual: deviation,
            tolerance: floor,
            bound: Bound::AtLeast,
            pass,
        });
        pass
    }

    pub fn merge(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.entries.len() - self.passed()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        if let (Some(seed), Some(trials)) = (self.seed, self.trials) {
            out.push_str(&format!("seed: {seed}  trials: {trials}\n"));
        }
        for entry in &self.entries {
            out.push_str(&entry.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed\n",
            if self.all_pass() { "ok" } else { "FAILED" },
            self.passed(),
            self.failed()
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }
}
