use serde::{Deserialize, Serialize};

use super::{Arrow, Path, Quiver, QuiverWithRelations, Relation};
use crate::error::{Error, Result};
use crate::grading::WeightVector;

#[derive(Serialize, Deserialize)]
struct ArrowRecord {
    id: usize,
    name: String,
    src: usize,
    dst: usize,
    var: Option<usize>,
    base: Option<u32>,
}

#[derive(Serialize, Deserialize)]
struct RelationRecord {
    lhs: Vec<usize>,
    rhs: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct Document {
    vertices: Vec<String>,
    arrows: Vec<ArrowRecord>,
    relations: Vec<RelationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<i64>>,
}

/// Serializes to `{"vertices", "arrows", "relations"}`; Γ quivers also carry `"weights"`.
pub fn to_json(qwr: &QuiverWithRelations) -> Result<String> {
    let q = &qwr.quiver;
    let doc = Document {
        vertices: q.vertices().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowRecord {
                id: a.id,
                name: a.name.clone(),
                src: a.source,
                dst: a.target,
                var: a.var,
                base: a.base,
            })
            .collect(),
        relations: qwr
            .relations
            .iter()
            .map(|r| RelationRecord {
                lhs: r.lhs.arrows().to_vec(),
                rhs: r.rhs.arrows().to_vec(),
            })
            .collect(),
        weights: qwr.weights.as_ref().map(WeightVector::as_i64),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn from_json(text: &str) -> Result<QuiverWithRelations> {
    let doc: Document = serde_json::from_str(text)?;
    let arrows = doc
        .arrows
        .into_iter()
        .map(|a| Arrow {
            id: a.id,
            name: a.name,
            source: a.src,
            target: a.dst,
            var: a.var,
            base: a.base,
        })
        .collect();
    let quiver = Quiver::new(doc.vertices, arrows)?;
    let relations = doc
        .relations
        .into_iter()
        .map(|r| {
            let lhs = Path::from_arrows(&quiver, r.lhs)?;
            let rhs = Path::from_arrows(&quiver, r.rhs)?;
            Relation::new(&quiver, lhs, rhs)
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|e| match e {
            Error::InvalidPath(m) => Error::Validation(m),
            other => other,
        })?;
    let weights = doc.weights.map(|w| WeightVector::new(&w)).transpose()?;
    QuiverWithRelations::new(quiver, relations, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::build_gamma;

    #[test]
    fn round_trip() {
        let g = build_gamma(&WeightVector::new(&[1, 2, 3]).unwrap());
        let text = to_json(&g).unwrap();
        assert_eq!(from_json(&text).unwrap(), g);
    }

    #[test]
    fn schema_keys() {
        let g = build_gamma(&WeightVector::new(&[1, 1, 2]).unwrap());
        let v: serde_json::Value = serde_json::from_str(&to_json(&g).unwrap()).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(v["arrows"].as_array().unwrap().len(), 5);
        assert_eq!(v["relations"].as_array().unwrap().len(), 1);
        let a = &v["arrows"][0];
        for key in ["id", "name", "src", "dst", "var", "base"] {
            assert!(a.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn rejects_dangling_references() {
        let text = r#"{"vertices":["a"],"arrows":[{"id":0,"name":"f","src":0,"dst":3,"var":null,"base":null}],"relations":[]}"#;
        assert!(matches!(from_json(text), Err(Error::Validation(_))));
    }
}
