use serde::Serialize;

use crate::error::{Error, Result};
use crate::parallel;
use crate::quiver::{Path, QuiverWithRelations};

/// `entries[k][l] = dim e_k · CΓ · e_l`, rows and columns in vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    pub vertices: Vec<String>,
    #[serde(rename = "matrix")]
    pub entries: Vec<Vec<u64>>,
}

impl CartanMatrix {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn get(&self, k: usize, l: usize) -> u64 {
        self.entries[k][l]
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_text(&self) -> String {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (name, row) in self.vertices.iter().zip(&self.entries) {
            out.push_str(name);
            out.push('\t');
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Normal-form paths from `from` to `to` (vertex positions), ordered
/// lexicographically by variable sequence.
///
/// Depth-first search over arrows with weakly increasing variable index,
/// pruned to vertices from which `to` is reachable.
pub fn hom_basis(qwr: &QuiverWithRelations, from: usize, to: usize) -> Result<Vec<Path>> {
    let q = &qwr.quiver;
    let n = q.vertex_count();
    if from >= n {
        return Err(Error::VertexOutOfRange(from));
    }
    if to >= n {
        return Err(Error::VertexOutOfRange(to));
    }
    q.topological_order()?;
    let reach = q.reachability();
    let mut out = Vec::new();
    if !reach[from][to] {
        return Ok(out);
    }
    // arrows out of each vertex, sorted by (var, id)
    let mut sorted_out: Vec<Vec<(usize, usize)>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut arrows = q
            .outgoing(v)
            .iter()
            .map(|&id| {
                q.arrow(id)
                    .var
                    .map(|var| (var, id))
                    .ok_or(Error::UnlabeledArrow(id))
            })
            .collect::<Result<Vec<_>>>()?;
        arrows.sort_unstable();
        sorted_out.push(arrows);
    }
    let mut stack = Vec::new();
    dfs(
        q,
        &sorted_out,
        &reach,
        from,
        to,
        0,
        &mut stack,
        &mut out,
        from,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    q: &crate::quiver::Quiver,
    sorted_out: &[Vec<(usize, usize)>],
    reach: &[Vec<bool>],
    at: usize,
    to: usize,
    min_var: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Path>,
    start: usize,
) {
    if at == to {
        out.push(Path::from_parts_unchecked(start, stack.clone()));
    }
    for &(var, id) in &sorted_out[at] {
        if var < min_var {
            continue;
        }
        let next = q.arrow(id).target;
        if !reach[next][to] {
            continue;
        }
        stack.push(id);
        dfs(q, sorted_out, reach, next, to, var, stack, out, start);
        stack.pop();
    }
}

/// Cartan matrix from normal-form counts; one independent job per `(k, l)`.
pub fn cartan_matrix(qwr: &QuiverWithRelations) -> Result<CartanMatrix> {
    let n = qwr.quiver.vertex_count();
    let cells = parallel::map_range(n * n, |cell| {
        hom_basis(qwr, cell / n, cell % n).map(|b| b.len() as u64)
    });
    let flat = cells.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(CartanMatrix {
        vertices: qwr.quiver.vertices().to_vec(),
        entries: flat.chunks(n.max(1)).take(n).map(|c| c.to_vec()).collect(),
    })
}
