//! Machine checks of the finite shadows of the equivalence
//! `D^gr_Sg(A) ≅ D^b mod CΓ`.

mod exceptional;
mod gorenstein;
mod iso;
mod ktheory;
mod morphism;
mod report;

use serde::Serialize;

use crate::algebra::{check_confluence, DEFAULT_PATH_CAP};
use crate::grading::WeightVector;
use crate::mckay::verify_mckay_consistency;
use crate::quiver::build_gamma;

pub use exceptional::{check_exceptional_matrix, exceptional_matrix};
pub use gorenstein::check_gorenstein_reciprocity;
pub use iso::{
    check_isomorphism, check_isomorphism_on, unreached_monomials, IsomorphismReport, PairRecord,
};
pub use ktheory::k_theory_report;
pub use morphism::{path_image, MorphismAlgebra};
pub use report::{Assertion, Report, Status, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Iso,
    Gorenstein,
    Mckay,
    Confluence,
    Exceptional,
    Ktheory,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub kmax: usize,
    pub trials: usize,
    pub samples: usize,
    pub seed: u64,
    pub oracle_cap: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            kmax: 20,
            trials: 500,
            samples: 128,
            seed: 20_250_101,
            oracle_cap: DEFAULT_PATH_CAP,
        }
    }
}

pub fn check_mckay(w: &WeightVector) -> Report {
    let c = verify_mckay_consistency(w);
    let mut r = Report::new("mckay", w);
    r.assert(
        "mckay.arrow_counts",
        c.mismatches.is_empty(),
        format!(
            "{}x{} pairs compared; mismatches: {:?}",
            c.arrow_counts.len(),
            c.arrow_counts.len(),
            c.mismatches
        ),
    );
    r.assert(
        "mckay.row_sums",
        c.row_sums_ok,
        format!("every out-degree is {}", w.len()),
    );
    r.assert(
        "mckay.column_sums",
        c.column_sums_ok,
        format!("every in-degree is {}", w.len()),
    );
    r
}

pub fn confluence_report(w: &WeightVector, trials: usize, seed: u64) -> Report {
    let c = check_confluence(&build_gamma(w), trials, seed);
    let mut r = Report::new("confluence", w);
    r.assert(
        "conf.no_divergence",
        c.divergences.is_empty(),
        format!(
            "{} trials ({} with inversions), seed {}, {} divergences",
            c.trials,
            c.nontrivial_trials,
            c.seed,
            c.divergences.len()
        ),
    );
    r.assert(
        "conf.complete",
        c.incomplete.is_empty(),
        format!(
            "{} reductions stuck on a missing relation",
            c.incomplete.len()
        ),
    );
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub weights: WeightVector,
    pub seed: u64,
    pub reports: Vec<Report>,
    pub verdict: Verdict,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("weights {} seed {}\n", self.weights, self.seed);
        for r in &self.reports {
            out.push_str(&r.to_text());
        }
        out.push_str(match self.verdict {
            Verdict::Pass => "verdict: PASS\n",
            Verdict::Fail => "verdict: FAIL\n",
        });
        out
    }
}

/// Runs the selected checks in a fixed order.
pub fn run_suite(w: &WeightVector, suite: Suite, config: &CheckConfig) -> SuiteReport {
    let mut reports = Vec::new();
    if suite.includes(Suite::Mckay) {
        reports.push(check_mckay(w));
    }
    if suite.includes(Suite::Iso) {
        reports.push(check_isomorphism(w, config.samples, config.seed).to_report(config.samples));
    }
    if suite.includes(Suite::Gorenstein) {
        reports.push(check_gorenstein_reciprocity(w, config.kmax));
    }
    if suite.includes(Suite::Exceptional) {
        reports.push(check_exceptional_matrix(w));
    }
    if suite.includes(Suite::Ktheory) {
        reports.push(k_theory_report(w, config.oracle_cap));
    }
    if suite.includes(Suite::Confluence) {
        reports.push(confluence_report(w, config.trials, config.seed));
    }
    let verdict = if reports.iter().all(Report::passed) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    SuiteReport {
        weights: w.clone(),
        seed: config.seed,
        reports,
        verdict,
    }
}
