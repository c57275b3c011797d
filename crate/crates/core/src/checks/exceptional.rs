use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::report::Report;
use crate::grading::{dim_r_window, WeightVector};

/// `E[i][j] = dim Hom(O(i), O(j)) = dim R_{j-i}` for `0 <= i, j <= N-1`.
pub fn exceptional_matrix(w: &WeightVector) -> Vec<Vec<BigUint>> {
    let n = w.total() as usize;
    let dims = dim_r_window(w, n);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j >= i {
                        dims[j - i].clone()
                    } else {
                        BigUint::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Dimension-level shadow of the strong exceptional collection `(O, ..., O(N-1))`.
///
/// `Ext^0(O(i), O(j)) = R_{j-i}` and the top cohomology is dual to
/// `R_{i-j-N}`; both are read off the grading. The intermediate groups vanish
/// for line bundles on weighted projective space and are not computed.
pub fn check_exceptional_matrix(w: &WeightVector) -> Report {
    let e = exceptional_matrix(w);
    let n = e.len();
    let total = w.total() as i64;
    let mut report = Report::new("exceptional", w);

    let bad_diag: Vec<usize> = (0..n).filter(|&i| !e[i][i].is_one()).collect();
    report.assert(
        "exc.unit_diagonal",
        bad_diag.is_empty(),
        format!("E is {n}x{n}; non-unit diagonal at {bad_diag:?}"),
    );

    let below: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .filter(|&(i, j)| !e[i][j].is_zero())
        .collect();
    report.assert(
        "exc.upper_triangular",
        below.is_empty(),
        format!("nonzero entries below the diagonal: {below:?}"),
    );

    // dim R_{i-j-N}: i - j - N <= -1 for every pair in range.
    let serre: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let d = i as i64 - j as i64 - total;
            !crate::grading::dim_r(w, d).is_zero()
        })
        .collect();
    report.assert(
        "exc.serre_dual_vanishing",
        serre.is_empty(),
        format!("pairs with dim R_(i-j-N) != 0: {serre:?}"),
    );
    report.assume(
        "exc.intermediate_cohomology",
        "H^p(O(d)) = 0 for 0 < p < n-1 on weighted projective space; not computed",
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(raw: &[i64]) -> Vec<Vec<u32>> {
        exceptional_matrix(&WeightVector::new(raw).unwrap())
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.try_into().unwrap()).collect())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(table(&[1, 1]), vec![vec![1, 2], vec![0, 1]]);
        assert_eq!(
            table(&[1, 2]),
            vec![vec![1, 1, 2], vec![0, 1, 1], vec![0, 0, 1]]
        );
        for raw in [&[1i64, 1][..], &[2, 3], &[1, 2, 3, 4]] {
            let r = check_exceptional_matrix(&WeightVector::new(raw).unwrap());
            assert!(r.passed(), "{}", r.to_text());
        }
    }
}
