use num_integer::Integer;

use crate::grading::WeightVector;

/// Every ordered weight vector with `n` in `lengths`, entries in
/// `1..=max_weight`, gcd one and `N <= max_total`, in lexicographic order
/// within each length.
pub fn weight_vectors(lengths: &[usize], max_weight: u32, max_total: u32) -> Vec<WeightVector> {
    let mut out = Vec::new();
    for &n in lengths {
        let mut prefix = Vec::with_capacity(n);
        extend(
            n,
            max_weight as i64,
            max_total as i64,
            &mut prefix,
            &mut out,
        );
    }
    out
}

fn extend(
    n: usize,
    max_weight: i64,
    max_total: i64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<WeightVector>,
) {
    if prefix.len() == n {
        let gcd = prefix.iter().fold(0i64, |g, a| g.gcd(a));
        if gcd == 1 && prefix.iter().sum::<i64>() <= max_total {
            out.push(WeightVector::new(prefix).expect("filtered above"));
        }
        return;
    }
    for a in 1..=max_weight {
        prefix.push(a);
        extend(n, max_weight, max_total, prefix, out);
        prefix.pop();
    }
}

/// The standard sweep: `n ∈ {2, 3, 4}`, `a_i <= 4`, gcd one, `N <= 12`.
pub fn standard_sweep() -> Vec<WeightVector> {
    weight_vectors(&[2, 3, 4], 4, 12)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        let v = weight_vectors(&[2], 3, 100);
        let raw: Vec<Vec<u32>> = v.iter().map(|w| w.weights().to_vec()).collect();
        assert_eq!(
            raw,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![2, 1],
                vec![2, 3],
                vec![3, 1],
                vec![3, 2]
            ]
        );
    }

    #[test]
    fn standard_sweep_bounds() {
        let s = standard_sweep();
        assert!(s
            .iter()
            .all(|w| w.total() <= 12 && w.weights().iter().all(|&a| a <= 4)));
        // brute-force count of the same set
        let mut count = 0;
        for n in 2..=4u32 {
            for code in 0..4u32.pow(n) {
                let ws: Vec<i64> = (0..n)
                    .map(|p| (code / 4u32.pow(p) % 4 + 1) as i64)
                    .collect();
                let g = ws.iter().fold(0i64, |g, a| g.gcd(a));
                if g == 1 && ws.iter().sum::<i64>() <= 12 {
                    count += 1;
                }
            }
        }
        assert_eq!(s.len(), count);
    }
}
