use crate::grading::{dim_r, enumerate_monomials, Monomial, WeightVector};
use crate::quiver::{Path, QuiverWithRelations};

/// The total morphism algebra `⊕ Hom(O(i), O(j))` of the twists `O(i)`.
///
/// `Hom(O(i), O(j))` is modelled by the monomials of degree `j - i`, and
/// composition is monomial multiplication. The shift `s` is the degree step
/// `N`, so `Hom(O, s^k O)` is `A_k`.
#[derive(Clone, Debug)]
pub struct MorphismAlgebra {
    weights: WeightVector,
}

impl MorphismAlgebra {
    pub fn new(weights: &WeightVector) -> Self {
        Self {
            weights: weights.clone(),
        }
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// Monomial basis of `Hom(O(i), O(j))`, lexicographic; empty when `j < i`.
    pub fn hom_basis(&self, i: i64, j: i64) -> Vec<Monomial> {
        enumerate_monomials(&self.weights, j - i)
    }

    pub fn dim(&self, i: i64, j: i64) -> num_bigint::BigUint {
        dim_r(&self.weights, j - i)
    }

    /// `g ∘ f` for `f: O(i) -> O(j)` and `g: O(j) -> O(k)`.
    pub fn compose(&self, g: &Monomial, f: &Monomial) -> Monomial {
        f.mul(g)
    }

    /// Identity of `O(i)`.
    pub fn identity(&self) -> Monomial {
        Monomial::one(&self.weights)
    }

    /// `Hom(O, s^k O) = Hom(O(0), O(kN))`.
    pub fn shift_hom_dim(&self, k: i64) -> num_bigint::BigUint {
        self.dim(0, k * self.weights.total() as i64)
    }
}

/// Image of a path of `Γ(w)`: arrow `x_{i,k}` goes to multiplication by `x_i`,
/// so a path maps to the monomial counting each variable along it.
pub fn path_image(w: &WeightVector, qwr: &QuiverWithRelations, path: &Path) -> Monomial {
    let mut exponents = vec![0u32; w.len()];
    for &id in path.arrows() {
        let var = qwr.quiver.arrow(id).var.expect("Γ arrows carry variables");
        exponents[var - 1] += 1;
    }
    Monomial::new(w, exponents)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{build_gamma, gamma_vertex};

    #[test]
    fn images() {
        let w = WeightVector::new(&[1, 1, 2]).unwrap();
        let g = build_gamma(&w);
        let id = |n: &str| g.quiver.arrow_by_name(n).unwrap();
        let p = Path::from_arrows(&g.quiver, vec![id("x_1_1"), id("x_2_2")]).unwrap();
        let m = path_image(&w, &g, &p);
        assert_eq!((m.exponents(), m.degree()), (&[1, 1, 0][..], 2));
        let p = Path::from_arrows(&g.quiver, vec![id("x_3_1")]).unwrap();
        let m = path_image(&w, &g, &p);
        assert_eq!((m.exponents(), m.degree()), (&[0, 0, 1][..], 2));
        let e = Path::trivial(gamma_vertex(2));
        assert_eq!(path_image(&w, &g, &e), Monomial::one(&w));
    }

    #[test]
    fn algebra_structure() {
        let w = WeightVector::new(&[1, 2]).unwrap();
        let alg = MorphismAlgebra::new(&w);
        assert!(alg.hom_basis(2, 1).is_empty());
        assert_eq!(alg.dim(0, 2), 2u32.into());
        let f = &alg.hom_basis(0, 1)[0];
        let g = &alg.hom_basis(1, 3)[1];
        let gf = alg.compose(g, f);
        assert_eq!(gf.degree(), 3);
        assert_eq!(alg.compose(&alg.identity(), f), *f);
        assert_eq!(alg.shift_hom_dim(1), 2u32.into());
    }
}
