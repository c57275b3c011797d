//! Quivers, paths and relations.
//!
//! Vertices are addressed by their position in [`Quiver::vertices`]; arrows by
//! their dense id. Paths list arrows in traversal order (first-traversed arrow
//! first), so the algebraic product `x_{j,k+a_i} x_{i,k}` is stored as
//! `[x_{i,k}, x_{j,k+a_i}]`.

mod dot;
mod dsl;
mod gamma;
mod json;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grading::WeightVector;

pub use dot::export_dot;
pub use dsl::{parse_quiver_dsl, serialize_dsl};
pub use gamma::{build_gamma, gamma_vertex, vertex_rank};
pub use json::{from_json, to_json};

pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: ArrowId,
    pub name: String,
    pub source: usize,
    pub target: usize,
    /// 1-based variable index `i` of `x_{i,k}`, when the arrow has one.
    pub var: Option<usize>,
    /// Base index `k` of `x_{i,k}`, the rank of the source vertex.
    pub base: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    out: Vec<Vec<ArrowId>>,
}

impl Quiver {
    /// Checks that ids are dense, endpoints exist and names are unique.
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.as_str(), i).is_some() {
                return Err(Error::Validation(format!("duplicate vertex {v}")));
            }
        }
        let mut names = HashMap::new();
        let mut out = vec![Vec::new(); vertices.len()];
        for (position, arrow) in arrows.iter().enumerate() {
            if arrow.id != position {
                return Err(Error::Validation(format!(
                    "arrow {} has id {} at position {position}",
                    arrow.name, arrow.id
                )));
            }
            for end in [arrow.source, arrow.target] {
                if end >= vertices.len() {
                    return Err(Error::Validation(format!(
                        "arrow {} references missing vertex {end}",
                        arrow.name
                    )));
                }
            }
            if names.insert(arrow.name.as_str(), arrow.id).is_some() {
                return Err(Error::Validation(format!("duplicate arrow {}", arrow.name)));
            }
            out[arrow.source].push(arrow.id);
        }
        Ok(Self {
            vertices,
            arrows,
            out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Arrows leaving `vertex`, in id order.
    pub fn outgoing(&self, vertex: usize) -> &[ArrowId] {
        &self.out[vertex]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// `counts[k][l]` is the number of arrows from `k` to `l`.
    pub fn arrow_count_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut counts = vec![vec![0; n]; n];
        for a in &self.arrows {
            counts[a.source][a.target] += 1;
        }
        counts
    }

    /// A topological order of the vertices, or the first vertex found on a cycle.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for a in &self.arrows {
            indegree[a.target] += 1;
        }
        let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &id in self.outgoing(v).iter().rev() {
                let t = self.arrows[id].target;
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    ready.push(t);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indegree[v] > 0).unwrap_or(0);
            return Err(Error::CyclicQuiver(self.vertices[stuck].clone()));
        }
        Ok(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// `reach[u][v]`: some path (possibly empty) runs from `u` to `v`.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut reach = vec![vec![false; n]; n];
        for (start, row) in reach.iter_mut().enumerate() {
            let mut stack = vec![start];
            row[start] = true;
            while let Some(v) = stack.pop() {
                for &id in self.outgoing(v) {
                    let t = self.arrows[id].target;
                    if !row[t] {
                        row[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        reach
    }
}

/// A composable sequence of arrows in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: usize,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn new(quiver: &Quiver, start: usize, arrows: Vec<ArrowId>) -> Result<Self> {
        if start >= quiver.vertex_count() {
            return Err(Error::InvalidPath(format!(
                "start vertex {start} out of range"
            )));
        }
        let mut at = start;
        for (step, &id) in arrows.iter().enumerate() {
            let arrow = quiver.arrows.get(id).ok_or_else(|| {
                Error::InvalidPath(format!("step {step} uses unknown arrow {id}"))
            })?;
            if arrow.source != at {
                return Err(Error::InvalidPath(format!(
                    "arrow {} leaves {} but the path is at {}",
                    arrow.name, quiver.vertices[arrow.source], quiver.vertices[at]
                )));
            }
            at = arrow.target;
        }
        Ok(Self { start, arrows })
    }

    /// Path from a non-empty arrow list, starting at the first arrow's source.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        let first = *arrows
            .first()
            .ok_or_else(|| Error::InvalidPath("empty arrow list has no start".into()))?;
        let start = quiver
            .arrows
            .get(first)
            .ok_or_else(|| Error::InvalidPath(format!("unknown arrow {first}")))?
            .source;
        Self::new(quiver, start, arrows)
    }

    pub fn trivial(vertex: usize) -> Self {
        Self {
            start: vertex,
            arrows: Vec::new(),
        }
    }

    pub(crate) fn from_parts_unchecked(start: usize, arrows: Vec<ArrowId>) -> Self {
        Self { start, arrows }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self, quiver: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.start, |&id| quiver.arrow(id).target)
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`; `None` unless `next` starts where `self` ends.
    pub fn concat(&self, quiver: &Quiver, next: &Path) -> Option<Path> {
        if self.end(quiver) != next.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            start: self.start,
            arrows,
        })
    }

    /// Variable index of every step, failing on unlabeled arrows.
    pub fn vars(&self, quiver: &Quiver) -> Result<Vec<usize>> {
        self.arrows
            .iter()
            .map(|&id| quiver.arrow(id).var.ok_or(Error::UnlabeledArrow(id)))
            .collect()
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e[{}]", quiver.vertices[self.start]);
        }
        self.arrows
            .iter()
            .map(|&id| quiver.arrow(id).name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The relation `lhs = rhs` between two parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Path,
    pub rhs: Path,
}

impl Relation {
    pub fn new(quiver: &Quiver, lhs: Path, rhs: Path) -> Result<Self> {
        if lhs.start() != rhs.start() || lhs.end(quiver) != rhs.end(quiver) {
            return Err(Error::Validation(format!(
                "relation sides {} and {} are not parallel",
                lhs.display(quiver),
                rhs.display(quiver)
            )));
        }
        Ok(Self { lhs, rhs })
    }

    pub fn source(&self) -> usize {
        self.lhs.start()
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        self.lhs.end(quiver)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverWithRelations {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Weight vector the quiver was built from, if any.
    pub weights: Option<WeightVector>,
}

impl QuiverWithRelations {
    pub fn new(
        quiver: Quiver,
        relations: Vec<Relation>,
        weights: Option<WeightVector>,
    ) -> Result<Self> {
        for r in &relations {
            Path::new(&quiver, r.lhs.start(), r.lhs.arrows().to_vec())?;
            Path::new(&quiver, r.rhs.start(), r.rhs.arrows().to_vec())?;
            Relation::new(&quiver, r.lhs.clone(), r.rhs.clone())?;
        }
        Ok(Self {
            quiver,
            relations,
            weights,
        })
    }

    /// Equality of quiver and relations, ignoring weight provenance.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cycle() -> Quiver {
        let arrows = vec![
            Arrow {
                id: 0,
                name: "a".into(),
                source: 0,
                target: 1,
                var: None,
                base: None,
            },
            Arrow {
                id: 1,
                name: "b".into(),
                source: 1,
                target: 0,
                var: None,
                base: None,
            },
        ];
        Quiver::new(vec!["u".into(), "v".into()], arrows).unwrap()
    }

    #[test]
    fn rejects_bad_quivers() {
        let bad = Arrow {
            id: 0,
            name: "a".into(),
            source: 0,
            target: 5,
            var: None,
            base: None,
        };
        assert!(matches!(
            Quiver::new(vec!["u".into()], vec![bad]),
            Err(Error::Validation(_))
        ));
        assert!(Quiver::new(vec!["u".into(), "u".into()], vec![]).is_err());
        let sparse = Arrow {
            id: 3,
            name: "a".into(),
            source: 0,
            target: 0,
            var: None,
            base: None,
        };
        assert!(Quiver::new(vec!["u".into()], vec![sparse]).is_err());
    }

    #[test]
    fn paths_must_compose() {
        let q = two_cycle();
        assert!(Path::new(&q, 0, vec![0, 1, 0]).is_ok());
        assert!(matches!(
            Path::new(&q, 0, vec![1]),
            Err(Error::InvalidPath(_))
        ));
        assert!(matches!(
            Path::new(&q, 0, vec![7]),
            Err(Error::InvalidPath(_))
        ));
        let p = Path::new(&q, 0, vec![0]).unwrap();
        let r = Path::new(&q, 1, vec![1]).unwrap();
        assert_eq!(p.concat(&q, &r).unwrap().arrows(), &[0, 1]);
        assert!(p.concat(&q, &p).is_none());
        assert_eq!(Path::trivial(1).end(&q), 1);
    }

    #[test]
    fn cycle_detection() {
        let q = two_cycle();
        assert!(matches!(q.topological_order(), Err(Error::CyclicQuiver(_))));
        assert!(q.reachability()[1][0]);
    }

    #[test]
    fn relations_must_be_parallel() {
        let q = two_cycle();
        let a = Path::new(&q, 0, vec![0]).unwrap();
        let e = Path::trivial(0);
        assert!(Relation::new(&q, a, e).is_err());
    }
}
