use serde::Serialize;

use crate::grading::WeightVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Taken as known, not computed. Never fails a verdict.
    Assumed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// `{"check", "weights", "assertions": [{"id", "status", "detail"}], "verdict"}`.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub weights: WeightVector,
    pub assertions: Vec<Assertion>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(check: &str, weights: &WeightVector) -> Self {
        Self {
            check: check.to_string(),
            weights: weights.clone(),
            assertions: Vec::new(),
            verdict: Verdict::Pass,
        }
    }

    pub fn assert(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(id, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    pub fn assume(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.push(id, Status::Assumed, detail);
    }

    fn push(&mut self, id: impl Into<String>, status: Status, detail: impl Into<String>) {
        if status == Status::Fail {
            self.verdict = Verdict::Fail;
        }
        self.assertions.push(Assertion {
            id: id.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| a.status == Status::Fail)
    }

    pub fn find(&self, id: &str) -> Option<&Assertion> {
        self.assertions.iter().find(|a| a.id == id)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {}: {}\n",
            self.check,
            self.weights,
            match self.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
            }
        );
        for a in &self.assertions {
            let tag = match a.status {
                Status::Pass => "ok  ",
                Status::Fail => "FAIL",
                Status::Assumed => "assm",
            };
            out.push_str(&format!("  [{tag}] {} {}\n", a.id, a.detail));
        }
        out
    }
}
