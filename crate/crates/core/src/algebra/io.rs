//! JSON shape for quivers with relations, shared by fixtures and the CLI.
//!
//! ```json
//! {
//!   "vertices": 3,
//!   "arrows": [{"label": "u", "source": 0, "target": 1}],
//!   "relations": [[{"coeff": "-1", "path": ["u", "v"]}]],
//!   "nilpotency": 5
//! }
//! ```
//!
//! Paths list arrow labels in traversal order (first arrow first). Alpha and
//! gamma arrows of the E6 family use the labels `a<i>` / `g<i>`.

use super::{Algebra, AlgebraError, Arrow, ArrowLabel, PathWord, Quiver, Relation, RelationTerm};
use crate::field::Field;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverFile {
    pub vertices: usize,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
    pub nilpotency: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermSpec {
    /// integer coefficient, as a decimal string to stay field-agnostic
    pub coeff: String,
    pub path: Vec<String>,
}

pub fn parse_label(s: &str) -> ArrowLabel {
    if let Some(rest) = s.strip_prefix('a') {
        if let Ok(i) = rest.parse::<u32>() {
            return ArrowLabel::Alpha(i);
        }
    }
    if let Some(rest) = s.strip_prefix('g') {
        if let Ok(i) = rest.parse::<u32>() {
            return ArrowLabel::Gamma(i);
        }
    }
    ArrowLabel::Named(s.to_string())
}

impl QuiverFile {
    pub fn to_quiver(&self) -> Result<Quiver, AlgebraError> {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { label: parse_label(&a.label), source: a.source, target: a.target })
            .collect();
        Quiver::new(self.vertices, arrows)
    }

    pub fn to_relations(&self, quiver: &Quiver, field: &Field) -> Result<Vec<Relation>, AlgebraError> {
        let mut out = Vec::new();
        for rel in &self.relations {
            let mut terms = Vec::new();
            for t in rel {
                let c: i64 = t
                    .coeff
                    .parse()
                    .map_err(|_| AlgebraError::UnknownLabel(format!("bad coefficient {}", t.coeff)))?;
                let mut arrows = Vec::new();
                for lbl in &t.path {
                    let id = quiver
                        .arrow_by_label(&parse_label(lbl))
                        .ok_or_else(|| AlgebraError::UnknownLabel(lbl.clone()))?;
                    arrows.push(id);
                }
                let source = match arrows.first() {
                    Some(&a) => quiver.arrows[a].source,
                    None => return Err(AlgebraError::UnknownLabel("empty relation path".into())),
                };
                terms.push(RelationTerm { coeff: field.from_i64(c), word: PathWord { source, arrows } });
            }
            out.push(terms);
        }
        Ok(out)
    }

    pub fn build_algebra(&self, field: Field) -> Result<Algebra, AlgebraError> {
        let quiver = self.to_quiver()?;
        let relations = self.to_relations(&quiver, &field)?;
        Algebra::build(quiver, field, &relations, self.nilpotency)
    }
}

/// Snapshot an existing quiver + relations into the file shape. Coefficients
/// must be small integers, which holds for every relation set this crate
/// generates.
pub fn quiver_to_file(quiver: &Quiver, relations: &[Relation], nilpotency: usize) -> QuiverFile {
    QuiverFile {
        vertices: quiver.vertex_count,
        arrows: quiver
            .arrows
            .iter()
            .map(|a| ArrowSpec { label: a.label.to_string(), source: a.source, target: a.target })
            .collect(),
        relations: relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|t| TermSpec {
                        coeff: t.coeff.to_string(),
                        path: t.word.arrows.iter().map(|&a| quiver.arrows[a].label.to_string()).collect(),
                    })
                    .collect()
            })
            .collect(),
        nilpotency,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let src = r#"{
            "vertices": 1,
            "arrows": [{"label": "x", "source": 0, "target": 0}],
            "relations": [[{"coeff": "1", "path": ["x", "x"]}]],
            "nilpotency": 3
        }"#;
        let file: QuiverFile = serde_json::from_str(src).unwrap();
        let alg = file.build_algebra(Field::prime(2).unwrap()).unwrap();
        assert_eq!(alg.dim(), 2);

        let rels = file.to_relations(&file.to_quiver().unwrap(), &Field::prime(2).unwrap()).unwrap();
        let back = quiver_to_file(alg.quiver(), &rels, 3);
        let json = serde_json::to_string(&back).unwrap();
        let reparsed: QuiverFile = serde_json::from_str(&json).unwrap();
        let alg2 = reparsed.build_algebra(Field::prime(2).unwrap()).unwrap();
        assert_eq!(alg2.dim(), 2);
    }
}
