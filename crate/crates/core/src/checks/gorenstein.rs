use super::report::Report;
use crate::grading::{
    dim_a, dim_a_interior, enumerate_interior, enumerate_monomials, WeightVector,
};
use crate::parallel;

/// Per-step reciprocity `dim A°_{k+1} = dim A_k` for `k = 0..kmax-1`, plus the
/// set equality `{m + (1,...,1) : deg m = kN} = {m > 0 : deg m = (k+1)N}`.
pub fn check_gorenstein_reciprocity(w: &WeightVector, kmax: usize) -> Report {
    let n = w.total() as i64;
    let steps = parallel::map_range(kmax, |k| {
        let k = k as i64;
        let lower = dim_a(w, k);
        let interior = dim_a_interior(w, k + 1);
        // lexicographic order survives the shift, so equal sets compare as lists
        let shifted: Vec<_> = enumerate_monomials(w, k * n)
            .iter()
            .map(|m| m.shift_by_ones(w))
            .collect();
        let bijection = shifted == enumerate_interior(w, (k + 1) * n);
        (k, lower, interior, bijection)
    });
    let mut report = Report::new("gorenstein", w);
    for (k, lower, interior, bijection) in steps {
        report.assert(
            format!("gor.count.k{k}"),
            lower == interior,
            format!("dim A_{k} = {lower}, interior dim A_{} = {interior}", k + 1),
        );
        report.assert(
            format!("gor.shift.k{k}"),
            bijection,
            format!(
                "m -> m + (1,...,1) maps degree {} onto interior degree {}",
                k * n,
                (k + 1) * n
            ),
        );
    }
    report
}
