//! Cartan matrix of `CQ/I` by linear algebra, independent of rewriting.
//!
//! For each pair `(k, l)` the space `e_k CQ e_l` has as basis all paths from
//! `k` to `l`. The ideal meets it in the span of `u (lhs - rhs) v` over every
//! relation and every prefix `u` and suffix `v` making the product a path
//! from `k` to `l`. The quotient dimension is the path count minus the rank of
//! that span, computed with exact rationals.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::basis::CartanMatrix;
use crate::error::{Error, Result};
use crate::parallel;
use crate::quiver::{ArrowId, Quiver, QuiverWithRelations};

pub const DEFAULT_PATH_CAP: usize = 200_000;

type SparseRow = Vec<(usize, BigRational)>;

/// Incremental row echelon form over `Q`. Every stored row has leading
/// coefficient one at its pivot column and no entries left of it.
#[derive(Default)]
pub struct EchelonBasis {
    pivots: BTreeMap<usize, SparseRow>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the basis and keeps it if independent.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row: SparseRow = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        row.sort_by_key(|(col, _)| *col);
        loop {
            let Some((lead, coeff)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(pivot) => row = axpy(&row, &-coeff, pivot),
                None => {
                    let inv = coeff.recip();
                    let normalized = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
                    self.pivots.insert(lead, normalized);
                    return true;
                }
            }
        }
    }
}

/// `row + factor * other`, both sorted by column, dropping zeros.
fn axpy(row: &SparseRow, factor: &BigRational, other: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_row = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_other = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_other {
            out.push((other[j].0, factor * &other[j].1));
            j += 1;
        } else {
            let v = &row[i].1 + factor * &other[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a list of integer vectors given as sparse rows.
pub fn exact_rank(rows: impl IntoIterator<Item = Vec<(usize, i64)>>) -> usize {
    let mut basis = EchelonBasis::new();
    for row in rows {
        basis.insert(
            row.into_iter()
                .map(|(c, v)| (c, BigRational::from_integer(v.into())))
                .collect(),
        );
    }
    basis.rank()
}

/// All paths from `from` to `to`, as arrow lists. Requires an acyclic quiver.
fn all_paths(
    q: &Quiver,
    reach: &[Vec<bool>],
    from: usize,
    to: usize,
    cap: usize,
) -> Result<Vec<Vec<ArrowId>>> {
    let mut out = Vec::new();
    if !reach[from][to] {
        return Ok(out);
    }
    let mut stack: Vec<ArrowId> = Vec::new();
    walk(q, reach, from, to, cap, &mut stack, &mut out)?;
    Ok(out)
}

fn walk(
    q: &Quiver,
    reach: &[Vec<bool>],
    at: usize,
    to: usize,
    cap: usize,
    stack: &mut Vec<ArrowId>,
    out: &mut Vec<Vec<ArrowId>>,
) -> Result<()> {
    if at == to {
        out.push(stack.clone());
        if out.len() > cap {
            return Err(Error::PathCapExceeded {
                from: String::new(),
                to: q.vertices()[to].clone(),
                count: out.len(),
                cap,
            });
        }
    }
    for &id in q.outgoing(at) {
        let next = q.arrow(id).target;
        if reach[next][to] {
            stack.push(id);
            walk(q, reach, next, to, cap, stack, out)?;
            stack.pop();
        }
    }
    Ok(())
}

/// `dim e_from · CQ/I · e_to` by exact linear algebra.
pub fn hom_dimension_oracle(
    qwr: &QuiverWithRelations,
    reach: &[Vec<bool>],
    from: usize,
    to: usize,
    cap: usize,
) -> Result<u64> {
    let q = &qwr.quiver;
    let name_cap = |e: Error| match e {
        Error::PathCapExceeded { count, cap, .. } => Error::PathCapExceeded {
            from: q.vertices()[from].clone(),
            to: q.vertices()[to].clone(),
            count,
            cap,
        },
        other => other,
    };
    let paths = all_paths(q, reach, from, to, cap).map_err(name_cap)?;
    if paths.is_empty() {
        return Ok(0);
    }
    let column: HashMap<&[ArrowId], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();

    let mut basis = EchelonBasis::new();
    let mut prefix_cache: HashMap<usize, Vec<Vec<ArrowId>>> = HashMap::new();
    let mut suffix_cache: HashMap<usize, Vec<Vec<ArrowId>>> = HashMap::new();
    for r in &qwr.relations {
        let (s, t) = (r.source(), r.target(q));
        if !reach[from][s] || !reach[t][to] {
            continue;
        }
        if let Entry::Vacant(e) = prefix_cache.entry(s) {
            e.insert(all_paths(q, reach, from, s, cap).map_err(name_cap)?);
        }
        if let Entry::Vacant(e) = suffix_cache.entry(t) {
            e.insert(all_paths(q, reach, t, to, cap).map_err(name_cap)?);
        }
        for u in &prefix_cache[&s] {
            for v in &suffix_cache[&t] {
                let glue = |side: &[ArrowId]| {
                    let mut p = u.clone();
                    p.extend_from_slice(side);
                    p.extend_from_slice(v);
                    column[p.as_slice()]
                };
                let (a, b) = (glue(r.lhs.arrows()), glue(r.rhs.arrows()));
                if a == b {
                    continue;
                }
                basis.insert(vec![(a, BigRational::one()), (b, -BigRational::one())]);
                if basis.rank() == paths.len() {
                    return Ok(0);
                }
            }
        }
    }
    Ok((paths.len() - basis.rank()) as u64)
}

/// Cartan matrix by linear algebra; refuses cyclic quivers and path spaces
/// larger than `cap`.
pub fn cartan_matrix_oracle(qwr: &QuiverWithRelations, cap: usize) -> Result<CartanMatrix> {
    let q = &qwr.quiver;
    q.topological_order()?;
    let reach = q.reachability();
    let n = q.vertex_count();
    let cells = parallel::map_range(n * n, |cell| {
        hom_dimension_oracle(qwr, &reach, cell / n, cell % n, cap)
    });
    let flat = cells.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(CartanMatrix {
        vertices: q.vertices().to_vec(),
        entries: flat.chunks(n.max(1)).take(n).map(|c| c.to_vec()).collect(),
    })
}
