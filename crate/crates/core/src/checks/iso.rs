use std::collections::HashMap;

use rand::Rng;
use serde::Serialize;

use super::morphism::{path_image, MorphismAlgebra};
use super::report::Report;
use crate::algebra::{hom_basis, normal_form_with, random_path, trial_rng, RewriteSystem};
use crate::grading::{dim_r, enumerate_monomials, Monomial, WeightVector};
use crate::parallel;
use crate::quiver::{build_gamma, vertex_rank, Path, QuiverWithRelations};

/// Stream offset separating well-definedness samples from product samples.
const WELL_DEFINED_STREAM: u64 = 1 << 32;

#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    /// Paper-style indices `k, l` of `rho_k`, `rho_l`.
    pub from: u32,
    pub to: u32,
    pub path_basis: usize,
    pub monomial_basis: usize,
    pub injective: bool,
    pub surjective: bool,
    pub degrees_match: bool,
}

impl PairRecord {
    pub fn ok(&self) -> bool {
        self.injective
            && self.surjective
            && self.degrees_match
            && self.path_basis == self.monomial_basis
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsomorphismReport {
    pub weights: WeightVector,
    pub pairs: Vec<PairRecord>,
    pub relations_vanish: bool,
    pub failing_relations: Vec<usize>,
    pub multiplicativity_samples: usize,
    pub multiplicativity_failures: usize,
    pub well_defined_samples: usize,
    pub well_defined_failures: usize,
    pub seed: u64,
    pub passed: bool,
}

impl IsomorphismReport {
    pub fn to_report(&self, requested_samples: usize) -> Report {
        let mut r = Report::new("iso", &self.weights);
        r.assert(
            "iso.relations_vanish",
            self.relations_vanish,
            format!("failing relations: {:?}", self.failing_relations),
        );
        let bad: Vec<_> = self.pairs.iter().filter(|p| !p.ok()).collect();
        let total: usize = self.pairs.iter().map(|p| p.path_basis).sum();
        r.assert(
            "iso.pairwise_bijection",
            bad.is_empty(),
            if bad.is_empty() {
                format!(
                    "{} pairs, {total} basis paths matched to monomials",
                    self.pairs.len()
                )
            } else {
                let first = bad[0];
                format!(
                    "{} bad pairs, first rho{} -> rho{}: {} paths vs {} monomials",
                    bad.len(),
                    first.from,
                    first.to,
                    first.path_basis,
                    first.monomial_basis
                )
            },
        );
        r.assert(
            "iso.multiplicativity",
            self.multiplicativity_failures == 0
                && self.multiplicativity_samples >= requested_samples,
            format!(
                "{} samples, {} failures, seed {}",
                self.multiplicativity_samples, self.multiplicativity_failures, self.seed
            ),
        );
        r.assert(
            "iso.well_defined",
            self.well_defined_failures == 0,
            format!(
                "{} random paths, {} image changes under rewriting",
                self.well_defined_samples, self.well_defined_failures
            ),
        );
        r
    }
}

fn sorted(mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort();
    v
}

/// Checks that `x_{i,k} ↦ x_i` induces `CΓ(w) ≅ ⊕ Hom(O(k), O(l))`.
///
/// Relations must map to zero, each `e_k CΓ e_l` must map bijectively onto the
/// degree `l - k` monomials, and products are checked on `samples` random
/// composable pairs of basis paths.
pub fn check_isomorphism(w: &WeightVector, samples: usize, seed: u64) -> IsomorphismReport {
    let g = build_gamma(w);
    check_isomorphism_on(w, &g, samples, seed)
}

pub fn check_isomorphism_on(
    w: &WeightVector,
    g: &QuiverWithRelations,
    samples: usize,
    seed: u64,
) -> IsomorphismReport {
    let q = &g.quiver;
    let n = q.vertex_count();
    let algebra = MorphismAlgebra::new(w);

    let failing_relations: Vec<usize> = g
        .relations
        .iter()
        .enumerate()
        .filter(|(_, r)| path_image(w, g, &r.lhs) != path_image(w, g, &r.rhs))
        .map(|(i, _)| i)
        .collect();

    let cells = parallel::map_range(n * n, |cell| {
        let (k, l) = (cell / n, cell % n);
        let basis = hom_basis(g, k, l).expect("Γ is acyclic with labeled arrows");
        let degree = vertex_rank(l) as i64 - vertex_rank(k) as i64;
        let images: Vec<Monomial> = basis.iter().map(|p| path_image(w, g, p)).collect();
        let degrees_match = images.iter().all(|m| m.degree() == degree);
        let mut distinct = images.clone();
        distinct.sort();
        distinct.dedup();
        let monomials = algebra.hom_basis(vertex_rank(k) as i64, vertex_rank(l) as i64);
        let record = PairRecord {
            from: vertex_rank(k),
            to: vertex_rank(l),
            path_basis: basis.len(),
            monomial_basis: monomials.len(),
            injective: distinct.len() == images.len(),
            surjective: sorted(images) == monomials
                && dim_r(w, degree) == (monomials.len() as u64).into(),
            degrees_match,
        };
        (record, basis)
    });
    let mut bases: HashMap<(usize, usize), Vec<Path>> = HashMap::new();
    let mut pairs = Vec::with_capacity(n * n);
    for (cell, (record, basis)) in cells.into_iter().enumerate() {
        bases.insert((cell / n, cell % n), basis);
        pairs.push(record);
    }

    let system = RewriteSystem::new(g);
    let (multiplicativity_samples, multiplicativity_failures) =
        sample_products(w, g, &system, &bases, samples, seed);

    let checks = parallel::map_range(samples, |s| {
        let mut rng = trial_rng(seed, WELL_DEFINED_STREAM + s as u64);
        let p = random_path(g, &mut rng, n);
        match normal_form_with(g, &system, &p) {
            Ok(nf) => path_image(w, g, &nf) == path_image(w, g, &p),
            Err(_) => false,
        }
    });
    let well_defined_failures = checks.iter().filter(|ok| !**ok).count();

    let passed = failing_relations.is_empty()
        && pairs.iter().all(PairRecord::ok)
        && multiplicativity_failures == 0
        && multiplicativity_samples >= samples
        && well_defined_failures == 0;
    IsomorphismReport {
        weights: w.clone(),
        pairs,
        relations_vanish: failing_relations.is_empty(),
        failing_relations,
        multiplicativity_samples,
        multiplicativity_failures,
        well_defined_samples: samples,
        well_defined_failures,
        seed,
        passed,
    }
}

/// Draws composable basis pairs `p: k -> l`, `q: l -> m` and compares the
/// image of the normal form of `pq` with the product of images.
fn sample_products(
    w: &WeightVector,
    g: &QuiverWithRelations,
    system: &RewriteSystem,
    bases: &HashMap<(usize, usize), Vec<Path>>,
    samples: usize,
    seed: u64,
) -> (usize, usize) {
    let q = &g.quiver;
    let n = q.vertex_count();
    let algebra = MorphismAlgebra::new(w);
    let outcomes = parallel::map_range(samples, |s| {
        let mut rng = trial_rng(seed, s as u64);
        loop {
            let mut triple = [
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            ];
            triple.sort_unstable();
            let [k, l, m] = triple;
            let (left, right) = (&bases[&(k, l)], &bases[&(l, m)]);
            if left.is_empty() || right.is_empty() {
                continue;
            }
            let p = &left[rng.random_range(0..left.len())];
            let r = &right[rng.random_range(0..right.len())];
            let product = p.concat(q, r).expect("bases meet at l");
            let Ok(nf) = normal_form_with(g, system, &product) else {
                return false;
            };
            let expected = algebra.compose(&path_image(w, g, r), &path_image(w, g, p));
            return bases[&(k, m)].contains(&nf) && path_image(w, g, &nf) == expected;
        }
    });
    let failures = outcomes.iter().filter(|ok| !**ok).count();
    (outcomes.len(), failures)
}

/// Monomials of degree `l - k` reached by no basis path; empty when surjective.
pub fn unreached_monomials(
    w: &WeightVector,
    g: &QuiverWithRelations,
    k: usize,
    l: usize,
) -> Vec<Monomial> {
    let images: Vec<Monomial> = hom_basis(g, k, l)
        .unwrap_or_default()
        .iter()
        .map(|p| path_image(w, g, p))
        .collect();
    enumerate_monomials(w, vertex_rank(l) as i64 - vertex_rank(k) as i64)
        .into_iter()
        .filter(|m| !images.contains(m))
        .collect()
}
