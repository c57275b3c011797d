use super::{Arrow, Path, Quiver, QuiverWithRelations, Relation};
use crate::grading::WeightVector;

/// Position of `rho_k` (`1 <= k <= N-1`) in the vertex list of `Γ(w)`.
pub fn gamma_vertex(k: u32) -> usize {
    assert!(k >= 1, "rho_0 is not a vertex of Γ");
    (k - 1) as usize
}

/// The index `k` of the vertex `rho_k` at position `position` of `Γ(w)`.
pub fn vertex_rank(position: usize) -> u32 {
    position as u32 + 1
}

pub(crate) fn arrow_name(var: usize, base: u32) -> String {
    format!("x_{var}_{base}")
}

/// Builds `Γ(w) = (Q(w), I(w))`.
///
/// `Q(w)` keeps the vertices `rho_1, ..., rho_{N-1}` of the McKay quiver and
/// those arrows `x_{i,k}: rho_k -> rho_{k+a_i}` with `1 <= k` and
/// `k + a_i <= N - 1`. For `i < j` and `1 <= k <= N - a_i - a_j - 1` the
/// relation `x_{j,k+a_i} x_{i,k} = x_{i,k+a_j} x_{j,k}` is stored in traversal
/// order as `[x_{i,k}, x_{j,k+a_i}] = [x_{j,k}, x_{i,k+a_j}]`.
pub fn build_gamma(w: &WeightVector) -> QuiverWithRelations {
    let total = w.total();
    let vertices: Vec<String> = (1..total).map(|k| format!("rho{k}")).collect();

    let mut arrows = Vec::new();
    // index[(i, k)] -> arrow id
    let mut index = std::collections::HashMap::new();
    for k in 1..total {
        for var in 1..=w.len() {
            let target = k + w.weight(var);
            if target > total - 1 {
                continue;
            }
            let id = arrows.len();
            index.insert((var, k), id);
            arrows.push(Arrow {
                id,
                name: arrow_name(var, k),
                source: gamma_vertex(k),
                target: gamma_vertex(target),
                var: Some(var),
                base: Some(k),
            });
        }
    }
    let quiver = Quiver::new(vertices, arrows).expect("Γ arrows are well formed");

    let mut relations = Vec::new();
    for i in 1..=w.len() {
        for j in (i + 1)..=w.len() {
            let (ai, aj) = (w.weight(i) as i64, w.weight(j) as i64);
            let last = total as i64 - ai - aj - 1;
            for k in 1..=last.max(0) as u32 {
                let x = |var: usize, base: u32| index[&(var, base)];
                let lhs = vec![x(i, k), x(j, k + w.weight(i))];
                let rhs = vec![x(j, k), x(i, k + w.weight(j))];
                let start = gamma_vertex(k);
                relations.push(Relation {
                    lhs: Path::from_parts_unchecked(start, lhs),
                    rhs: Path::from_parts_unchecked(start, rhs),
                });
            }
        }
    }

    QuiverWithRelations::new(quiver, relations, Some(w.clone()))
        .expect("Γ relations are parallel paths")
}
