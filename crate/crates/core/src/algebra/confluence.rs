use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::rewrite::{normal_form_with, RewriteSystem};
use crate::error::Result;
use crate::parallel;
use crate::quiver::{Path, QuiverWithRelations};

/// Random reduction orders tried per sampled path.
const ORDERS_PER_TRIAL: usize = 4;

#[derive(Clone, Debug, Serialize)]
pub struct Divergence {
    pub trial: usize,
    pub path: String,
    pub leftmost: String,
    pub random: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub trials: usize,
    pub seed: u64,
    pub rewrite_rules: usize,
    /// Trials whose sampled path had at least one inversion.
    pub nontrivial_trials: usize,
    pub longest_path: usize,
    pub divergences: Vec<Divergence>,
    /// Trials where some reduction got stuck on a missing relation instance.
    pub incomplete: Vec<usize>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.divergences.is_empty() && self.incomplete.is_empty()
    }
}

pub(crate) fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random walk from a random vertex, choosing uniformly among outgoing arrows
/// and stopping at a sink or after a random target length.
pub(crate) fn random_path(qwr: &QuiverWithRelations, rng: &mut impl Rng, max_len: usize) -> Path {
    let q = &qwr.quiver;
    let start = rng.random_range(0..q.vertex_count());
    let target_len = rng.random_range(0..=max_len);
    let mut at = start;
    let mut arrows = Vec::new();
    while arrows.len() < target_len {
        let out = q.outgoing(at);
        if out.is_empty() {
            break;
        }
        let id = out[rng.random_range(0..out.len())];
        arrows.push(id);
        at = q.arrow(id).target;
    }
    Path::from_parts_unchecked(start, arrows)
}

fn random_reduction(
    qwr: &QuiverWithRelations,
    system: &RewriteSystem,
    path: &Path,
    rng: &mut impl Rng,
) -> Result<Path> {
    let mut current = path.clone();
    loop {
        let spots = system.inversions(qwr, &current)?;
        if spots.is_empty() {
            return Ok(current);
        }
        let t = spots[rng.random_range(0..spots.len())];
        current = system.apply(&current, t)?;
    }
}

/// Samples `trials` random paths and checks that random rewrite orders all
/// reach the leftmost-first normal form. Trial `i` draws from ChaCha8 stream
/// `i` of `seed`, so results do not depend on scheduling.
pub fn check_confluence(qwr: &QuiverWithRelations, trials: usize, seed: u64) -> ConfluenceReport {
    let system = RewriteSystem::new(qwr);
    let max_len = qwr.quiver.vertex_count();
    let outcomes = parallel::map_range(trials, |trial| {
        let mut rng = trial_rng(seed, trial as u64);
        let path = random_path(qwr, &mut rng, max_len);
        let nontrivial = system.inversions(qwr, &path).is_ok_and(|s| !s.is_empty());
        let leftmost = match normal_form_with(qwr, &system, &path) {
            Ok(p) => p,
            Err(_) => return (path.len(), nontrivial, None, true),
        };
        for _ in 0..ORDERS_PER_TRIAL {
            match random_reduction(qwr, &system, &path, &mut rng) {
                Ok(p) if p == leftmost => {}
                Ok(p) => {
                    let q = &qwr.quiver;
                    let d = Divergence {
                        trial,
                        path: path.display(q),
                        leftmost: leftmost.display(q),
                        random: p.display(q),
                    };
                    return (path.len(), nontrivial, Some(d), false);
                }
                Err(_) => return (path.len(), nontrivial, None, true),
            }
        }
        (path.len(), nontrivial, None, false)
    });

    let mut report = ConfluenceReport {
        trials,
        seed,
        rewrite_rules: system.len(),
        nontrivial_trials: 0,
        longest_path: 0,
        divergences: Vec::new(),
        incomplete: Vec::new(),
    };
    for (trial, (len, nontrivial, divergence, incomplete)) in outcomes.into_iter().enumerate() {
        report.longest_path = report.longest_path.max(len);
        report.nontrivial_trials += nontrivial as usize;
        report.divergences.extend(divergence);
        if incomplete {
            report.incomplete.push(trial);
        }
    }
    report
}
