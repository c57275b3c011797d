use num_bigint::BigUint;

use super::exceptional::exceptional_matrix;
use super::report::Report;
use crate::algebra::{cartan_matrix, cartan_matrix_oracle, CartanMatrix};
use crate::error::Error;
use crate::grading::WeightVector;
use crate::quiver::build_gamma;

fn minor_equals(e: &[Vec<BigUint>], c: &CartanMatrix) -> bool {
    let size = e.len() - 1;
    c.size() == size && (0..size).all(|k| (0..size).all(|l| e[k + 1][l + 1] == c.get(k, l).into()))
}

/// Rank bookkeeping for `D^b qgr A = <O, D_Sg>`: the full collection has `N`
/// objects, `D_Sg` is generated by the last `N - 1`, and the Gram matrix of
/// `(O(1), ..., O(N-1))` must be the Cartan matrix of `Γ(w)`.
pub fn k_theory_report(w: &WeightVector, oracle_cap: usize) -> Report {
    let e = exceptional_matrix(w);
    let g = build_gamma(w);
    let mut report = Report::new("ktheory", w);

    let collection_rank = e.len();
    let singularity_rank = collection_rank - 1;
    report.assert(
        "kt.collection_rank",
        collection_rank == w.total() as usize,
        format!("rank K_0(D^b qgr A) = {collection_rank} = N"),
    );
    report.assert(
        "kt.singularity_rank",
        singularity_rank == g.quiver.vertex_count(),
        format!(
            "rank K_0(D_Sg) = {singularity_rank}, Γ has {} vertices",
            g.quiver.vertex_count()
        ),
    );
    report.assert(
        "kt.decomposition",
        collection_rank == 1 + singularity_rank,
        format!("{collection_rank} = 1 + {singularity_rank}"),
    );

    match cartan_matrix(&g) {
        Ok(c) => report.assert(
            "kt.gram_equals_cartan",
            minor_equals(&e, &c),
            format!(
                "{}x{} Gram minor vs rewriting Cartan matrix",
                c.size(),
                c.size()
            ),
        ),
        Err(err) => report.assert("kt.gram_equals_cartan", false, err.to_string()),
    }
    match cartan_matrix_oracle(&g, oracle_cap) {
        Ok(c) => report.assert(
            "kt.gram_equals_oracle",
            minor_equals(&e, &c),
            "Gram minor vs linear-algebra Cartan matrix",
        ),
        Err(Error::PathCapExceeded { count, cap, .. }) => report.assume(
            "kt.gram_equals_oracle",
            format!("skipped: {count} raw paths exceed cap {cap}"),
        ),
        Err(err) => report.assert("kt.gram_equals_oracle", false, err.to_string()),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_PATH_CAP;

    #[test]
    fn examples() {
        for (raw, ranks) in [
            (&[1i64, 1, 2][..], "4 = 1 + 3"),
            (&[1, 1], "2 = 1 + 1"),
            (&[1, 1, 1], "3 = 1 + 2"),
        ] {
            let r = k_theory_report(&WeightVector::new(raw).unwrap(), DEFAULT_PATH_CAP);
            assert!(r.passed(), "{}", r.to_text());
            assert_eq!(r.find("kt.decomposition").unwrap().detail, ranks);
        }
    }
}
