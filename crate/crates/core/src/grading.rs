//! Lattice-point counting for the weighted polynomial ring `R = C[x_1, ..., x_n]`
//! with `deg x_i = a_i`, and for its Veronese subring `A` with `A_k = R_{kN}`.
//!
//! Every count is an exact [`BigUint`]. Degrees are `i64` and negative degrees
//! simply have dimension zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A validated weight vector `(a_1, ..., a_n)`: `n >= 2`, all `a_i >= 1`, gcd one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    weights: Vec<u32>,
    total: u32,
}

impl WeightVector {
    /// Validates raw integers. Checks run in the order: count, sign, gcd.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::TooFewWeights { count: raw.len() });
        }
        for (index, &value) in raw.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositiveWeight {
                    index: index + 1,
                    value,
                });
            }
            if value > u32::MAX as i64 {
                return Err(Error::WeightTooLarge { value });
            }
        }
        let gcd = raw.iter().fold(0i64, |g, &a| g.gcd(&a));
        if gcd != 1 {
            return Err(Error::GcdNotOne {
                weights: raw.to_vec(),
                gcd,
            });
        }
        let weights: Vec<u32> = raw.iter().map(|&a| a as u32).collect();
        let total = weights
            .iter()
            .try_fold(0u32, |s, &a| s.checked_add(a))
            .ok_or(Error::WeightTooLarge {
                value: raw.iter().sum(),
            })?;
        Ok(Self { weights, total })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Number of variables `n`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `N = a_1 + ... + a_n`, the order of the cyclic group.
    pub fn total(&self) -> u32 {
        self.total
    }

    /// Weight of the 1-based variable `x_i`.
    pub fn weight(&self, var: usize) -> u32 {
        self.weights[var - 1]
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.weights.iter().map(|&a| a as i64).collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.weights.serialize(serializer)
    }
}

pub fn validate_weights(raw: &[i64]) -> Result<WeightVector> {
    WeightVector::new(raw)
}

/// A monomial `x_1^{m_1} ... x_n^{m_n}` with its weighted degree.
///
/// Ordering is lexicographic on the exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: i64,
}

impl Monomial {
    pub fn new(weights: &WeightVector, exponents: Vec<u32>) -> Self {
        assert_eq!(exponents.len(), weights.len(), "exponent length mismatch");
        let degree = exponents
            .iter()
            .zip(weights.weights())
            .map(|(&m, &a)| m as i64 * a as i64)
            .sum();
        Self { exponents, degree }
    }

    pub fn one(weights: &WeightVector) -> Self {
        Self {
            exponents: vec![0; weights.len()],
            degree: 0,
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Product of monomials: exponent vectors add, degrees add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exponents.len(), other.exponents.len());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// Multiplies by `x_1 x_2 ... x_n`, raising the degree by `N`.
    pub fn shift_by_ones(&self, weights: &WeightVector) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|m| m + 1).collect(),
            degree: self.degree + weights.total() as i64,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// `dim R_d` for `d = 0..=max`, by coin-counting dynamic programming.
pub fn dim_r_window(w: &WeightVector, max: usize) -> Vec<BigUint> {
    let mut table = vec![BigUint::zero(); max + 1];
    table[0] = BigUint::one();
    for &a in w.weights() {
        let a = a as usize;
        for d in a..=max {
            let prev = table[d - a].clone();
            table[d] += prev;
        }
    }
    table
}

/// `#{m : m_i >= 1, sum a_i m_i = d}` for `d = 0..=max`.
///
/// Each variable contributes the series `t^a / (1 - t^a)`, so a variable is
/// folded in by `new[d] = old[d - a] + new[d - a]`.
pub fn interior_window(w: &WeightVector, max: usize) -> Vec<BigUint> {
    let mut table = vec![BigUint::zero(); max + 1];
    table[0] = BigUint::one();
    for &a in w.weights() {
        let a = a as usize;
        let mut next = vec![BigUint::zero(); max + 1];
        for d in a..=max {
            next[d] = &table[d - a] + &next[d - a];
        }
        table = next;
    }
    table
}

/// Dimension of the degree-`d` piece of `R`; zero for negative `d`.
pub fn dim_r(w: &WeightVector, d: i64) -> BigUint {
    if d < 0 {
        return BigUint::zero();
    }
    dim_r_window(w, d as usize).pop().unwrap_or_default()
}

/// `dim A_k = dim R_{kN}`; zero for negative `k`.
pub fn dim_a(w: &WeightVector, k: i64) -> BigUint {
    if k < 0 {
        return BigUint::zero();
    }
    dim_r(w, k * w.total() as i64)
}

/// Number of strictly positive exponent vectors of degree `kN`.
pub fn dim_a_interior(w: &WeightVector, k: i64) -> BigUint {
    if k <= 0 {
        return BigUint::zero();
    }
    let d = (k * w.total() as i64) as usize;
    interior_window(w, d).pop().unwrap_or_default()
}

/// All exponent vectors of degree `d` in lexicographic order.
pub fn enumerate_monomials(w: &WeightVector, d: i64) -> Vec<Monomial> {
    enumerate_with_floor(w, d, 0)
}

/// All exponent vectors of degree `d` with every exponent at least one.
pub fn enumerate_interior(w: &WeightVector, d: i64) -> Vec<Monomial> {
    enumerate_with_floor(w, d, 1)
}

fn enumerate_with_floor(w: &WeightVector, d: i64, floor: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let d = d as usize;
    let n = w.len();
    // reachable[i][r]: variables i..n can realise degree r with exponents >= floor.
    let mut reachable = vec![vec![false; d + 1]; n + 1];
    reachable[n][0] = true;
    for i in (0..n).rev() {
        let a = w.weights()[i] as usize;
        let start = a * floor as usize;
        for r in start..=d {
            let mut m = start;
            while m <= r {
                if reachable[i + 1][r - m] {
                    reachable[i][r] = true;
                    break;
                }
                m += a;
            }
        }
    }
    if !reachable[0][d] {
        return out;
    }
    let mut exponents = vec![0u32; n];
    descend(w, &reachable, 0, d, floor, &mut exponents, &mut out);
    out
}

fn descend(
    w: &WeightVector,
    reachable: &[Vec<bool>],
    i: usize,
    remaining: usize,
    floor: u32,
    exponents: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if i == w.len() {
        out.push(Monomial {
            exponents: exponents.clone(),
            degree: exponents
                .iter()
                .zip(w.weights())
                .map(|(&m, &a)| m as i64 * a as i64)
                .sum(),
        });
        return;
    }
    let a = w.weights()[i] as usize;
    let mut m = floor as usize;
    while m * a <= remaining {
        if reachable[i + 1][remaining - m * a] {
            exponents[i] = m as u32;
            descend(
                w,
                reachable,
                i + 1,
                remaining - m * a,
                floor,
                exponents,
                out,
            );
        }
        m += 1;
    }
    exponents[i] = 0;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Ring {
    R,
    A,
}

impl std::str::FromStr for Ring {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "R" | "r" => Ok(Ring::R),
            "A" | "a" => Ok(Ring::A),
            other => Err(format!("unknown ring {other:?}, expected R or A")),
        }
    }
}

/// Dimensions of a graded ring over the window `0..=max_index`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub ring: Ring,
    pub weights: WeightVector,
    #[serde(serialize_with = "serialize_dims")]
    pub dims: BTreeMap<i64, BigUint>,
}

impl HilbertTable {
    pub fn get(&self, index: i64) -> BigUint {
        self.dims.get(&index).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.dims {
            out.push_str(&format!("{k}\t{v}\n"));
        }
        out
    }
}

fn serialize_dims<S: Serializer>(
    dims: &BTreeMap<i64, BigUint>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = serializer.serialize_map(Some(dims.len()))?;
    for (k, v) in dims {
        let number: serde_json::Number =
            v.to_string().parse().map_err(serde::ser::Error::custom)?;
        map.serialize_entry(&k.to_string(), &number)?;
    }
    map.end()
}

pub fn hilbert_table(w: &WeightVector, ring: Ring, max_index: usize) -> HilbertTable {
    let dims = match ring {
        Ring::R => dim_r_window(w, max_index)
            .into_iter()
            .enumerate()
            .map(|(d, v)| (d as i64, v))
            .collect(),
        Ring::A => {
            let step = w.total() as usize;
            let window = dim_r_window(w, max_index * step);
            (0..=max_index)
                .map(|k| (k as i64, window[k * step].clone()))
                .collect()
        }
    };
    HilbertTable {
        ring,
        weights: w.clone(),
        dims,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(raw: &[i64]) -> WeightVector {
        WeightVector::new(raw).unwrap()
    }

    fn exps(list: &[Monomial]) -> Vec<Vec<u32>> {
        list.iter().map(|m| m.exponents().to_vec()).collect()
    }

    #[test]
    fn validation() {
        let v = w(&[1, 2]);
        assert_eq!(v.len(), 2);
        assert_eq!(v.total(), 3);
        assert!(matches!(
            WeightVector::new(&[2, 4]),
            Err(Error::GcdNotOne { gcd: 2, .. })
        ));
        assert!(matches!(
            WeightVector::new(&[3]),
            Err(Error::TooFewWeights { count: 1 })
        ));
        assert!(matches!(
            WeightVector::new(&[1, 0]),
            Err(Error::NonPositiveWeight { index: 2, value: 0 })
        ));
        assert!(matches!(
            WeightVector::new(&[-1, 2]),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert_eq!(
            WeightVector::new(&[2, 4]).unwrap_err().to_string(),
            "gcd(2,4)=2 ≠ 1"
        );
    }

    #[test]
    fn dim_r_examples() {
        assert_eq!(dim_r(&w(&[1, 1, 2]), 2), 4u32.into());
        assert_eq!(dim_r(&w(&[2, 3]), 0), 1u32.into());
        assert_eq!(dim_r(&w(&[2, 3]), 1), 0u32.into());
        assert_eq!(dim_r(&w(&[2, 3]), 12), 3u32.into());
        assert_eq!(dim_r(&w(&[2, 3]), -4), 0u32.into());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            exps(&enumerate_monomials(&w(&[1, 1, 2]), 2)),
            vec![vec![0, 0, 1], vec![0, 2, 0], vec![1, 1, 0], vec![2, 0, 0]]
        );
        assert_eq!(exps(&enumerate_monomials(&w(&[1, 2]), 0)), vec![vec![0, 0]]);
        assert!(enumerate_monomials(&w(&[2, 3]), 1).is_empty());
        assert!(enumerate_monomials(&w(&[2, 3]), -1).is_empty());
        assert!(enumerate_monomials(&w(&[1, 1, 2]), 2)
            .iter()
            .all(|m| m.degree() == 2));
    }

    #[test]
    fn dim_a_examples() {
        assert_eq!(dim_a(&w(&[1, 1]), 1), 3u32.into());
        assert_eq!(dim_a(&w(&[1, 1, 2]), 0), 1u32.into());
        assert_eq!(dim_a(&w(&[1, 2]), 1), 2u32.into());
        assert_eq!(dim_a(&w(&[1, 2]), -1), 0u32.into());
    }

    #[test]
    fn dim_a_interior_examples() {
        assert_eq!(dim_a_interior(&w(&[1, 1]), 1), 1u32.into());
        assert_eq!(dim_a_interior(&w(&[2, 3]), 0), 0u32.into());
        // m1 + m2 + 2 m3 = 8 with every m_i >= 1: m3 = 1, 2, 3 give 5 + 3 + 1.
        assert_eq!(dim_a_interior(&w(&[1, 1, 2]), 2), 9u32.into());
        assert_eq!(dim_a(&w(&[1, 1, 2]), 1), 9u32.into());
        assert_eq!(enumerate_interior(&w(&[1, 1, 2]), 8).len(), 9);
    }

    #[test]
    fn hilbert_examples() {
        let t = hilbert_table(&w(&[1, 1]), Ring::R, 3);
        assert_eq!(
            t.dims.values().map(|v| v.to_string()).collect::<Vec<_>>(),
            ["1", "2", "3", "4"]
        );
        let t = hilbert_table(&w(&[1, 1]), Ring::A, 2);
        assert_eq!(
            t.dims.values().map(|v| v.to_string()).collect::<Vec<_>>(),
            ["1", "3", "5"]
        );
        let t = hilbert_table(&w(&[2, 3]), Ring::R, 5);
        assert_eq!(
            t.dims.values().map(|v| v.to_string()).collect::<Vec<_>>(),
            ["1", "0", "1", "1", "1", "1"]
        );
    }

    #[test]
    fn hilbert_json_shape() {
        let t = hilbert_table(&w(&[1, 1]), Ring::A, 2);
        let v: serde_json::Value = serde_json::from_str(&t.to_json().unwrap()).unwrap();
        assert_eq!(v["ring"], "A");
        assert_eq!(v["weights"], serde_json::json!([1, 1]));
        assert_eq!(v["dims"]["2"], 5);
    }

    #[test]
    fn big_dimensions_stay_exact() {
        // C(1002, 2) monomials of degree 1000 in three weight-one variables.
        let v = w(&[1, 1, 1]);
        assert_eq!(dim_r(&v, 1000), 501_501u32.into());
        let t = hilbert_table(&w(&[1, 1, 1, 1]), Ring::A, 3000);
        let json = t.to_json().unwrap();
        assert!(json.contains(&t.get(3000).to_string()));
    }
}
