//! Characters of the cyclic group `G = <g>`, `g = diag(ζ^{a_1}, ..., ζ^{a_n})`,
//! `ζ = exp(2πi/N)`, and its McKay quiver.
//!
//! Characters are never complex floats. A value `ζ^e` is stored as the residue
//! `e mod N`, and a sum of such values as a histogram over residues, i.e. an
//! element of the group ring `Z[C_N]`. Evaluating at `ζ` means reducing modulo
//! the cyclotomic polynomial `Φ_N`, which is exact integer polynomial division.

use serde::Serialize;

use crate::grading::WeightVector;
use crate::parallel;
use crate::quiver::{Arrow, Quiver};

/// The one-dimensional representation `ρ_k`, sending `g` to `ζ^{-k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel(u32);

impl IrrepLabel {
    pub fn new(w: &WeightVector, k: i64) -> Self {
        Self(k.rem_euclid(w.total() as i64) as u32)
    }

    pub fn index(self) -> u32 {
        self.0
    }

    /// Exponent residue `e` with `χ_{ρ_k}(g^m) = ζ^e`.
    pub fn character_exponent(self, w: &WeightVector, m: u32) -> u32 {
        let n = w.total() as i64;
        (-(self.0 as i64) * m as i64).rem_euclid(n) as u32
    }
}

/// Integer polynomials as coefficient vectors, lowest degree first.
fn poly_trim(p: &mut Vec<i64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Quotient of `num` by the monic `den`; panics on a nonzero remainder.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let (q, r) = poly_divmod(num, den);
    assert!(r.iter().all(|&c| c == 0), "inexact cyclotomic division");
    q
}

fn poly_divmod(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    if rem.len() <= dd {
        return (vec![0], rem);
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + dd];
        if c == 0 {
            continue;
        }
        quot[shift] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[shift + i] -= c * d;
        }
    }
    rem.truncate(dd.max(1));
    poly_trim(&mut rem);
    (quot, rem)
}

/// The cyclotomic polynomial `Φ_n`, from `x^n - 1 = Π_{d | n} Φ_d`.
pub fn cyclotomic(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

/// Evaluates `Σ_r hist[r] ζ^r` when the result is a rational integer.
fn evaluate_at_root(hist: &[i64], phi: &[i64]) -> Option<i64> {
    let (_, rem) = poly_divmod(hist, phi);
    match rem.as_slice() {
        [c] => Some(*c),
        _ => None,
    }
}

/// `a_{kl}`, the multiplicity of `ρ_k` in `ρ_l ⊗ ρ_Nat`, from the character
/// inner product `(1/N) Σ_m χ_{ρ_l ⊗ Nat}(g^m) conj(χ_{ρ_k}(g^m))`.
pub fn multiplicity_by_characters(w: &WeightVector, k: IrrepLabel, l: IrrepLabel) -> u32 {
    let n = w.total();
    let mut hist = vec![0i64; n as usize];
    for m in 0..n {
        let rho_l = l.character_exponent(w, m);
        let conj_rho_k = (n - k.character_exponent(w, m)) % n;
        for &a in w.weights() {
            let nat = ((a as u64 * m as u64) % n as u64) as u32;
            hist[((rho_l + nat + conj_rho_k) % n) as usize] += 1;
        }
    }
    let total =
        evaluate_at_root(&hist, &cyclotomic(n)).expect("character inner product is an integer");
    assert!(
        total >= 0 && total % n as i64 == 0,
        "character sum {total} not a multiple of {n}"
    );
    (total / n as i64) as u32
}

/// `a_{kl}` by counting: `#{i : l ≡ k + a_i (mod N)}`.
pub fn multiplicity_by_counting(w: &WeightVector, k: IrrepLabel, l: IrrepLabel) -> u32 {
    let n = w.total();
    w.weights()
        .iter()
        .filter(|&&a| (k.index() + a) % n == l.index())
        .count() as u32
}

/// `a_{kl}`; both the character sum and the residue count are evaluated and
/// must agree.
pub fn tensor_multiplicity(w: &WeightVector, k: IrrepLabel, l: IrrepLabel) -> u32 {
    let by_sum = multiplicity_by_characters(w, k, l);
    let by_count = multiplicity_by_counting(w, k, l);
    assert_eq!(
        by_sum, by_count,
        "character sum and residue count disagree for a_{{{},{}}}",
        k.0, l.0
    );
    by_count
}

/// The decomposition `ρ_l ⊗ ρ_Nat = ⊕_k ρ_k^{a_{kl}}` as the list of `a_{kl}` over `k`.
pub fn tensor_decomposition(w: &WeightVector, l: IrrepLabel) -> Vec<u32> {
    (0..w.total() as i64)
        .map(|k| tensor_multiplicity(w, IrrepLabel::new(w, k), l))
        .collect()
}

/// The McKay quiver: vertices `rho0..rho{N-1}`, arrows `x_{i,k}: rho_k -> rho_{k+a_i mod N}`
/// ordered by `k`, then `i`.
pub fn mckay_quiver(w: &WeightVector) -> Quiver {
    let n = w.total();
    let vertices = (0..n).map(|k| format!("rho{k}")).collect();
    let mut arrows = Vec::with_capacity(w.len() * n as usize);
    for k in 0..n {
        for var in 1..=w.len() {
            let id = arrows.len();
            arrows.push(Arrow {
                id,
                name: format!("x_{var}_{k}"),
                source: k as usize,
                target: ((k + w.weight(var)) % n) as usize,
                var: Some(var),
                base: Some(k),
            });
        }
    }
    Quiver::new(vertices, arrows).expect("McKay arrows are well formed")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McKayMismatch {
    pub from: u32,
    pub to: u32,
    pub arrows: usize,
    pub by_characters: u32,
    pub by_counting: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct McKayConsistency {
    pub weights: WeightVector,
    pub arrow_counts: Vec<Vec<usize>>,
    pub mismatches: Vec<McKayMismatch>,
    pub row_sums_ok: bool,
    pub column_sums_ok: bool,
}

impl McKayConsistency {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty() && self.row_sums_ok && self.column_sums_ok
    }
}

/// Compares the arrow-count matrix of [`mckay_quiver`] against `a_{kl}`
/// computed from characters and from residue counting, for every pair.
pub fn verify_mckay_consistency(w: &WeightVector) -> McKayConsistency {
    let quiver = mckay_quiver(w);
    let counts = quiver.arrow_count_matrix();
    let n = w.total() as i64;
    let pairs: Vec<(i64, i64)> = (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).collect();
    let mismatches = parallel::map(&pairs, |&(k, l)| {
        let (rk, rl) = (IrrepLabel::new(w, k), IrrepLabel::new(w, l));
        let by_characters = multiplicity_by_characters(w, rk, rl);
        let by_counting = multiplicity_by_counting(w, rk, rl);
        let arrows = counts[k as usize][l as usize];
        (arrows != by_characters as usize || by_characters != by_counting).then_some(
            McKayMismatch {
                from: k as u32,
                to: l as u32,
                arrows,
                by_characters,
                by_counting,
            },
        )
    })
    .into_iter()
    .flatten()
    .collect();
    let degree = w.len();
    let row_sums_ok = counts.iter().all(|row| row.iter().sum::<usize>() == degree);
    let column_sums_ok =
        (0..counts.len()).all(|l| counts.iter().map(|row| row[l]).sum::<usize>() == degree);
    McKayConsistency {
        weights: w.clone(),
        arrow_counts: counts,
        mismatches,
        row_sums_ok,
        column_sums_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(raw: &[i64]) -> WeightVector {
        WeightVector::new(raw).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn root_of_unity_sums() {
        // 1 + ζ + ... + ζ^{N-1} = 0 for N > 1.
        for n in 2..15 {
            assert_eq!(
                evaluate_at_root(&vec![1; n as usize], &cyclotomic(n)),
                Some(0)
            );
        }
        // ζ alone is not rational for N = 3.
        assert_eq!(evaluate_at_root(&[0, 1, 0], &cyclotomic(3)), None);
        assert_eq!(evaluate_at_root(&[5, 0, 0], &cyclotomic(3)), Some(5));
    }

    #[test]
    fn multiplicity_examples() {
        let v = w(&[1, 1]);
        assert_eq!(
            tensor_multiplicity(&v, IrrepLabel::new(&v, 1), IrrepLabel::new(&v, 0)),
            2
        );
        let v = w(&[1, 2]);
        assert_eq!(
            tensor_multiplicity(&v, IrrepLabel::new(&v, 0), IrrepLabel::new(&v, 0)),
            0
        );
        let v = w(&[1, 1, 2]);
        for k in 0..4 {
            let total: u32 = (0..4)
                .map(|l| tensor_multiplicity(&v, IrrepLabel::new(&v, k), IrrepLabel::new(&v, l)))
                .sum();
            assert_eq!(total, 3);
            assert_eq!(
                tensor_decomposition(&v, IrrepLabel::new(&v, k))
                    .iter()
                    .sum::<u32>(),
                3
            );
        }
    }

    #[test]
    fn character_exponents() {
        let v = w(&[1, 2]);
        let rho1 = IrrepLabel::new(&v, 1);
        assert_eq!(rho1.character_exponent(&v, 1), 2);
        assert_eq!(rho1.character_exponent(&v, 0), 0);
        assert_eq!(IrrepLabel::new(&v, 4).index(), 1);
    }

    #[test]
    fn quiver_shapes() {
        let q = mckay_quiver(&w(&[1, 1]));
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrows().len(), 4);
        assert_eq!(q.arrow_count_matrix(), vec![vec![0, 2], vec![2, 0]]);
        let q = mckay_quiver(&w(&[1, 1, 1]));
        assert_eq!((q.vertex_count(), q.arrows().len()), (3, 9));
        assert!((0..3).all(|v| q.outgoing(v).len() == 3));
    }

    #[test]
    fn consistency_examples() {
        for raw in [&[1i64, 1][..], &[1, 2], &[1, 1, 2], &[2, 3], &[1, 2, 3, 4]] {
            let report = verify_mckay_consistency(&w(raw));
            assert!(report.is_consistent(), "{raw:?}: {:?}", report.mismatches);
        }
        assert_eq!(
            verify_mckay_consistency(&w(&[1, 1])).arrow_counts,
            vec![vec![0, 2], vec![2, 0]]
        );
    }
}
