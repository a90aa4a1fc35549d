//! JSON shape for complexes, maps and cochains, used by fixtures and the
//! CLI export path. Paths are spelled as arrow-label lists in traversal
//! order, coefficients as decimal strings.

use super::{BimoduleComplex, BimoduleMap, ProjectiveIndex, TensorTerm};
use crate::algebra::{io::parse_label, Algebra, PathWord};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    pub terms: Vec<Vec<IndexSpec>>,
    pub maps: Vec<MapFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IndexSpec {
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<EntrySpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntrySpec {
    pub row: usize,
    pub col: usize,
    pub terms: Vec<TermSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: String,
    /// arrow labels of the left factor, traversal order; empty = idempotent
    pub a: Vec<String>,
    pub b: Vec<String>,
}

fn word_labels(alg: &Algebra, idx: usize) -> Vec<String> {
    alg.basis_word(idx)
        .arrows
        .iter()
        .map(|&a| alg.quiver().arrows[a].label.to_string())
        .collect()
}

pub fn map_to_file(alg: &Algebra, m: &BimoduleMap) -> MapFile {
    MapFile {
        rows: m.codomain.len(),
        cols: m.domain.len(),
        entries: m
            .entries
            .iter()
            .map(|(&(row, col), entry)| EntrySpec {
                row,
                col,
                terms: entry
                    .iter()
                    .map(|t| TermSpec {
                        coeff: t.coeff.to_string(),
                        a: word_labels(alg, t.a),
                        b: word_labels(alg, t.b),
                    })
                    .collect(),
            })
            .collect(),
    }
}

pub fn complex_to_file(cx: &BimoduleComplex) -> ComplexFile {
    let alg = &*cx.algebra;
    ComplexFile {
        terms: cx
            .terms
            .iter()
            .map(|t| t.iter().map(|p| IndexSpec { left: p.left, right: p.right }).collect())
            .collect(),
        maps: cx.maps.iter().map(|m| map_to_file(alg, m)).collect(),
    }
}

fn labels_to_word(alg: &Algebra, labels: &[String], source_hint: usize) -> Option<PathWord> {
    if labels.is_empty() {
        return Some(PathWord::idempotent(source_hint));
    }
    let q = alg.quiver();
    let arrows: Option<Vec<usize>> =
        labels.iter().map(|l| q.arrow_by_label(&parse_label(l))).collect();
    let arrows = arrows?;
    Some(PathWord { source: q.arrows[arrows[0]].source, arrows })
}

/// Rebuild a map over `alg` from its file form; scalar coefficients must be
/// small integers.
pub fn map_from_file(
    alg: &Algebra,
    domain: Vec<ProjectiveIndex>,
    codomain: Vec<ProjectiveIndex>,
    file: &MapFile,
) -> Option<BimoduleMap> {
    let mut m = BimoduleMap::zero(domain, codomain);
    for e in &file.entries {
        let row_idx = m.codomain.get(e.row)?.left;
        let col_right = m.domain.get(e.col)?.right;
        for t in &e.terms {
            let c: i64 = t.coeff.parse().ok()?;
            let a = labels_to_word(alg, &t.a, row_idx)?;
            let b = labels_to_word(alg, &t.b, col_right)?;
            let ai = alg.basis_index(&a)?;
            let bi = alg.basis_index(&b)?;
            m.add_term(alg, e.row, e.col, TensorTerm { coeff: alg.field().from_i64(c), a: ai, b: bi });
        }
    }
    m.validate(alg).ok()?;
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::super::test_support::dual_numbers_resolution;
    use super::*;
    use crate::field::Field;

    #[test]
    fn complex_round_trip() {
        let cx = dual_numbers_resolution(Field::prime(3).unwrap(), 3);
        let file = complex_to_file(&cx);
        let json = serde_json::to_string_pretty(&file).unwrap();
        let parsed: ComplexFile = serde_json::from_str(&json).unwrap();
        let alg = &*cx.algebra;
        for (t, m) in parsed.maps.iter().enumerate() {
            let dom: Vec<ProjectiveIndex> =
                parsed.terms[t + 1].iter().map(|i| ProjectiveIndex::new(i.left, i.right)).collect();
            let cod: Vec<ProjectiveIndex> =
                parsed.terms[t].iter().map(|i| ProjectiveIndex::new(i.left, i.right)).collect();
            let rebuilt = map_from_file(alg, dom, cod, m).unwrap();
            assert_eq!(&rebuilt, &cx.maps[t]);
        }
    }
}
