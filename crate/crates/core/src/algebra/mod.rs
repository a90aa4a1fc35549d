//! Quivers, paths, admissible ideals and the finite-dimensional quotient
//! algebra `A = KQ/I` with an explicit monomial basis.
//!
//! Composition convention, fixed once for the whole crate: paths compose
//! right-to-left, so in a product `x * y` the path `y` is traversed first.
//! Internally a `PathWord` stores its arrows in traversal order (first
//! arrow first); the right-to-left convention only shows up in products.

pub mod io;

use crate::field::{Field, Scalar};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("relation term is not parallel to the first term (expected {expect_src}->{expect_tgt}, got {got_src}->{got_tgt})")]
    NonParallelRelation { expect_src: usize, expect_tgt: usize, got_src: usize, got_tgt: usize },
    #[error("relation term has length {len} >= nilpotency bound {bound}")]
    RelationTooLong { len: usize, bound: usize },
    #[error("ideal is not admissible: idempotent of vertex {vertex} lies in the ideal")]
    NotAdmissible { vertex: usize },
    #[error("no nonzero path from vertex {from} to vertex {to}")]
    NoPath { from: usize, to: usize },
    #[error("ambiguous path from vertex {from} to vertex {to}: {count} basis paths")]
    AmbiguousPath { from: usize, to: usize, count: usize },
    #[error("arrow map is not incidence compatible at arrow {arrow}")]
    IncompatibleMorphism { arrow: usize },
    #[error("unknown arrow label {0}")]
    UnknownLabel(String),
    #[error("arrow endpoint out of range")]
    BadArrow,
}

/// Arrow names. `Alpha`/`Gamma` carry the index families used by the E6
/// quivers; `Named` covers engine-level test quivers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowLabel {
    Alpha(u32),
    Gamma(u32),
    Named(String),
}

impl fmt::Display for ArrowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowLabel::Alpha(i) => write!(f, "a{i}"),
            ArrowLabel::Gamma(i) => write!(f, "g{i}"),
            ArrowLabel::Named(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub label: ArrowLabel,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        for a in &arrows {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(AlgebraError::BadArrow);
            }
        }
        let mut labels: Vec<&ArrowLabel> = arrows.iter().map(|a| &a.label).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), arrows.len(), "arrow labels must be unique");
        Ok(Quiver { vertex_count, arrows })
    }

    pub fn arrow_by_label(&self, label: &ArrowLabel) -> Option<usize> {
        self.arrows.iter().position(|a| &a.label == label)
    }
}

/// A composable word of arrows. The empty word at a vertex is that
/// vertex's idempotent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn idempotent(v: usize) -> Self {
        PathWord { source: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| q.arrows[a].target)
    }

    /// `self` followed by `next` (traversal order), i.e. the product
    /// `next * self` in the right-to-left convention.
    pub fn then(&self, q: &Quiver, next: &PathWord) -> Option<PathWord> {
        if self.target(q) != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(PathWord { source: self.source, arrows })
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { word: self, quiver: q }
    }
}

pub struct PathDisplay<'a> {
    word: &'a PathWord,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e{}", self.word.source);
        }
        // right-to-left: last traversed arrow prints first
        let names: Vec<String> = self
            .word
            .arrows
            .iter()
            .rev()
            .map(|&a| self.quiver.arrows[a].label.to_string())
            .collect();
        write!(f, "{}", names.join("."))
    }
}

/// A K-linear combination of basis elements, sorted by basis index with
/// no zero coefficients.
pub type LinComb = Vec<(usize, Scalar)>;

/// One signed term of a relation.
#[derive(Debug, Clone)]
pub struct RelationTerm {
    pub coeff: Scalar,
    pub word: PathWord,
}

pub type Relation = Vec<RelationTerm>;

/// The finite-dimensional quotient algebra with its chosen monomial basis.
///
/// Basis elements are honest path words (the "standard monomials" of the
/// relation ideal); every product of basis elements re-expands exactly
/// into this basis through the precomputed table.
#[derive(Debug, Clone)]
pub struct Algebra {
    field: Field,
    quiver: Quiver,
    nilpotency: usize,
    basis: Vec<PathWord>,
    /// non-standard monomial -> combination of basis monomials
    rewrite: BTreeMap<PathWord, LinComb>,
    /// product table: `table[i][j]` is `basis[i] * basis[j]` (basis[j] first)
    table: Vec<Vec<LinComb>>,
    /// (target, source) -> basis indices of that corner
    corners: BTreeMap<(usize, usize), Vec<usize>>,
    word_index: BTreeMap<PathWord, usize>,
}

impl Algebra {
    pub fn build(
        quiver: Quiver,
        field: Field,
        relations: &[Relation],
        nilpotency: usize,
    ) -> Result<Self, AlgebraError> {
        // all composable words of length < nilpotency, sorted by (len, arrows, source)
        let mut words: Vec<PathWord> = (0..quiver.vertex_count).map(PathWord::idempotent).collect();
        let mut frontier: Vec<PathWord> = words.clone();
        for _len in 1..nilpotency {
            let mut next = Vec::new();
            for w in &frontier {
                let t = w.target(&quiver);
                for (ai, a) in quiver.arrows.iter().enumerate() {
                    if a.source == t {
                        let mut arrows = w.arrows.clone();
                        arrows.push(ai);
                        next.push(PathWord { source: w.source, arrows });
                    }
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        words.sort_by(|a, b| (a.len(), &a.arrows, a.source).cmp(&(b.len(), &b.arrows, b.source)));
        let index: BTreeMap<PathWord, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let n = words.len();

        // validate relations and express them as coordinate vectors
        let mut seeds: Vec<Vec<Scalar>> = Vec::new();
        for rel in relations {
            let mut v = vec![field.zero(); n];
            let mut sig: Option<(usize, usize)> = None;
            for term in rel {
                let src = term.word.source;
                let tgt = term.word.target(&quiver);
                match sig {
                    None => sig = Some((src, tgt)),
                    Some((es, et)) => {
                        if (src, tgt) != (es, et) {
                            return Err(AlgebraError::NonParallelRelation {
                                expect_src: es,
                                expect_tgt: et,
                                got_src: src,
                                got_tgt: tgt,
                            });
                        }
                    }
                }
                if term.word.len() >= nilpotency {
                    return Err(AlgebraError::RelationTooLong {
                        len: term.word.len(),
                        bound: nilpotency,
                    });
                }
                let i = index[&term.word];
                v[i] = field.add(&v[i], &term.coeff).unwrap();
            }
            seeds.push(v);
        }

        // two-sided closure: saturate with single-arrow extensions on both
        // sides until the span stabilizes. Words of length >= nilpotency are
        // zero by the length relations and simply drop out.
        let mut closure = IdealSpan::new(field, n);
        let mut queue: Vec<Vec<Scalar>> = seeds;
        while let Some(v) = queue.pop() {
            let Some(reduced) = closure.insert(&v) else { continue };
            for (ai, a) in quiver.arrows.iter().enumerate() {
                // extend on the left (arrow applied after the word)
                let mut after = vec![field.zero(); n];
                let mut nonzero = false;
                for (wi, c) in reduced.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let w = &words[wi];
                    if w.target(&quiver) != a.source || w.len() + 1 >= nilpotency {
                        continue;
                    }
                    let mut arrows = w.arrows.clone();
                    arrows.push(ai);
                    let ni = index[&PathWord { source: w.source, arrows }];
                    after[ni] = field.add(&after[ni], c).unwrap();
                    nonzero = true;
                }
                if nonzero {
                    queue.push(after);
                }
                // extend on the right (arrow traversed before the word)
                let mut before = vec![field.zero(); n];
                let mut nonzero = false;
                for (wi, c) in reduced.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let w = &words[wi];
                    if w.source != a.target || w.len() + 1 >= nilpotency {
                        continue;
                    }
                    let mut arrows = vec![ai];
                    arrows.extend_from_slice(&w.arrows);
                    let ni = index[&PathWord { source: a.source, arrows }];
                    before[ni] = field.add(&before[ni], c).unwrap();
                    nonzero = true;
                }
                if nonzero {
                    queue.push(before);
                }
            }
        }

        // standard monomials: words that are not pivots of the closure.
        // Pivots are taken at the largest word of each relation so that
        // shorter/smaller words survive as the basis.
        let rewrite_rows = closure.rows();
        let mut is_pivot = vec![false; n];
        let mut rewrite: BTreeMap<PathWord, LinComb> = BTreeMap::new();
        for row in &rewrite_rows {
            let pivot = row.pivot;
            is_pivot[pivot] = true;
            if words[pivot].is_empty() {
                return Err(AlgebraError::NotAdmissible { vertex: words[pivot].source });
            }
        }
        let mut basis: Vec<PathWord> = Vec::new();
        let mut basis_of_word: Vec<Option<usize>> = vec![None; n];
        for (wi, w) in words.iter().enumerate() {
            if !is_pivot[wi] {
                basis_of_word[wi] = Some(basis.len());
                basis.push(w.clone());
            }
        }
        for row in &rewrite_rows {
            let mut comb: LinComb = Vec::new();
            for (wi, c) in row.vec.iter().enumerate() {
                if wi == row.pivot || c.is_zero() {
                    continue;
                }
                let b = basis_of_word[wi].expect("reduced rows only touch standard monomials");
                comb.push((b, field.neg(c).unwrap()));
            }
            comb.sort_by_key(|(i, _)| *i);
            rewrite.insert(words[row.pivot].clone(), comb);
        }

        let word_index: BTreeMap<PathWord, usize> =
            basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();

        let mut corners: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, w) in basis.iter().enumerate() {
            corners.entry((w.target(&quiver), w.source)).or_default().push(i);
        }

        let mut alg = Algebra {
            field,
            quiver,
            nilpotency,
            basis,
            rewrite,
            table: Vec::new(),
            corners,
            word_index,
        };
        alg.table = alg.build_table();
        Ok(alg)
    }

    fn build_table(&self) -> Vec<Vec<LinComb>> {
        let dim = self.basis.len();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                // basis[i] * basis[j]: traverse basis[j] first
                if let Some(w) = self.basis[j].then(&self.quiver, &self.basis[i]) {
                    table[i][j] = self.word_to_comb(&w);
                }
            }
        }
        table
    }

    /// Expand an arbitrary composable word into the basis.
    pub fn word_to_comb(&self, w: &PathWord) -> LinComb {
        if w.len() >= self.nilpotency {
            return Vec::new();
        }
        if let Some(&i) = self.word_index.get(w) {
            return vec![(i, self.field.one())];
        }
        if let Some(c) = self.rewrite.get(w) {
            return c.clone();
        }
        // words never enumerated (non-composable) are zero
        Vec::new()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }

    pub fn basis_word(&self, i: usize) -> &PathWord {
        &self.basis[i]
    }

    pub fn basis_index(&self, w: &PathWord) -> Option<usize> {
        self.word_index.get(w).copied()
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.basis_index(&PathWord::idempotent(v)).expect("idempotents are basis elements")
    }

    pub fn source_of(&self, i: usize) -> usize {
        self.basis[i].source
    }

    pub fn target_of(&self, i: usize) -> usize {
        self.basis[i].target(&self.quiver)
    }

    /// Basis of the corner `e_i A e_j` (paths from `j` to `i`).
    pub fn corner_basis(&self, i: usize, j: usize) -> &[usize] {
        self.corners.get(&(i, j)).map_or(&[], |v| v.as_slice())
    }

    /// Basis paths running from `u` to `v` (equals `corner_basis(v, u)`).
    pub fn paths_from_to(&self, u: usize, v: usize) -> &[usize] {
        self.corner_basis(v, u)
    }

    /// The unique basis path from `i` to `j`; the trivial path counts as a
    /// candidate when `i == j`.
    pub fn unique_path(&self, i: usize, j: usize) -> Result<usize, AlgebraError> {
        let c = self.paths_from_to(i, j);
        match c.len() {
            0 => Err(AlgebraError::NoPath { from: i, to: j }),
            1 => Ok(c[0]),
            n => Err(AlgebraError::AmbiguousPath { from: i, to: j, count: n }),
        }
    }

    /// Product of two basis elements, `basis[j]` traversed first.
    pub fn mul_basis(&self, i: usize, j: usize) -> &LinComb {
        &self.table[i][j]
    }

    /// Product `x * y` with `y` traversed first.
    pub fn mul(&self, x: &LinComb, y: &LinComb) -> LinComb {
        let f = &self.field;
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, ci) in x {
            for (j, cj) in y {
                let c = f.mul(ci, cj).unwrap();
                for (k, ck) in &self.table[*i][*j] {
                    let entry = acc.entry(*k).or_insert_with(|| f.zero());
                    *entry = f.add_mul(entry, &c, ck).unwrap();
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn scale(&self, c: &Scalar, x: &LinComb) -> LinComb {
        if c.is_zero() {
            return Vec::new();
        }
        x.iter().map(|(i, ci)| (*i, self.field.mul(c, ci).unwrap())).collect()
    }

    pub fn add(&self, x: &LinComb, y: &LinComb) -> LinComb {
        let f = &self.field;
        let mut acc: BTreeMap<usize, Scalar> = x.iter().cloned().collect();
        for (i, c) in y {
            let entry = acc.entry(*i).or_insert_with(|| f.zero());
            *entry = f.add(entry, c).unwrap();
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn unit(&self) -> LinComb {
        (0..self.quiver.vertex_count).map(|v| (self.idempotent(v), self.field.one())).collect()
    }

    /// Dimension of the center, computed directly from the multiplication
    /// table: solutions of `z b_k = b_k z` for every basis element.
    pub fn center_dim(&self) -> usize {
        use crate::matrix::Matrix;
        let dim = self.dim();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for k in 0..dim {
            // rows indexed by (k, output basis element)
            let mut block = vec![vec![self.field.zero(); dim]; dim];
            for z in 0..dim {
                for (out, c) in self.mul_basis(z, k) {
                    block[*out][z] = self.field.add(&block[*out][z], c).unwrap();
                }
                for (out, c) in self.mul_basis(k, z) {
                    block[*out][z] = self.field.sub(&block[*out][z], c).unwrap();
                }
            }
            rows.extend(block);
        }
        let m = Matrix::from_rows(self.field, rows);
        m.kernel_basis().rows()
    }
}

/// A signed-permutation endomorphism of the path algebra: vertices map to
/// vertices, each arrow to a scalar multiple of a single arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub vertex_map: Vec<usize>,
    /// arrow id -> (sign, arrow id); signs are +-1
    pub arrow_map: Vec<(i8, usize)>,
}

impl AlgebraMorphism {
    pub fn identity(q: &Quiver) -> Self {
        AlgebraMorphism {
            vertex_map: (0..q.vertex_count).collect(),
            arrow_map: (0..q.arrows.len()).map(|a| (1, a)).collect(),
        }
    }

    pub fn validate(&self, q: &Quiver) -> Result<(), AlgebraError> {
        for (a, arrow) in q.arrows.iter().enumerate() {
            let (sign, b) = self.arrow_map[a];
            if sign != 1 && sign != -1 {
                return Err(AlgebraError::IncompatibleMorphism { arrow: a });
            }
            let img = &q.arrows[b];
            if img.source != self.vertex_map[arrow.source] || img.target != self.vertex_map[arrow.target] {
                return Err(AlgebraError::IncompatibleMorphism { arrow: a });
            }
        }
        Ok(())
    }

    pub fn compose(&self, then: &AlgebraMorphism) -> AlgebraMorphism {
        AlgebraMorphism {
            vertex_map: self.vertex_map.iter().map(|&v| then.vertex_map[v]).collect(),
            arrow_map: self
                .arrow_map
                .iter()
                .map(|&(s, a)| {
                    let (s2, b) = then.arrow_map[a];
                    (s * s2, b)
                })
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &v)| i == v)
            && self.arrow_map.iter().enumerate().all(|(i, &(s, a))| s == 1 && a == i)
    }

    pub fn pow(&self, k: usize) -> AlgebraMorphism {
        let mut acc = AlgebraMorphism {
            vertex_map: (0..self.vertex_map.len()).collect(),
            arrow_map: (0..self.arrow_map.len()).map(|a| (1, a)).collect(),
        };
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Smallest k >= 1 with `self^k = id`, or None past the search bound.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }

    /// Image of a basis path, ignoring signs. Useful when only the vertex
    /// combinatorics matter.
    pub fn map_word(&self, _q: &Quiver, w: &PathWord) -> PathWord {
        PathWord {
            source: self.vertex_map[w.source],
            arrows: w.arrows.iter().map(|&a| self.arrow_map[a].1).collect(),
        }
    }
}

/// Apply a validated morphism to an algebra element.
pub fn apply_morphism(alg: &Algebra, phi: &AlgebraMorphism, x: &LinComb) -> LinComb {
    let f = alg.field();
    let mut acc: LinComb = Vec::new();
    for (i, c) in x {
        let w = alg.basis_word(*i);
        let mut sign = 1i8;
        for &a in &w.arrows {
            sign *= phi.arrow_map[a].0;
        }
        let img = phi.map_word(alg.quiver(), w);
        let coeff = if sign == 1 { c.clone() } else { f.neg(c).unwrap() };
        let scaled: LinComb = alg
            .word_to_comb(&img)
            .into_iter()
            .map(|(k, ck)| (k, f.mul(&coeff, &ck).unwrap()))
            .collect();
        acc = alg.add(&acc, &scaled);
    }
    acc
}

/// Incrementally maintained reduced row space over the word coordinates.
/// Pivots sit at the *largest* nonzero coordinate so that small words
/// survive as standard monomials.
struct IdealSpan {
    field: Field,
    #[allow(dead_code)]
    width: usize,
    rows: Vec<SpanRow>,
}

struct SpanRow {
    pivot: usize,
    vec: Vec<Scalar>,
}

impl IdealSpan {
    fn new(field: Field, width: usize) -> Self {
        IdealSpan { field, width, rows: Vec::new() }
    }

    /// Reduce `v` against the span; if independent, normalize, insert, keep
    /// the whole span reduced, and return the reduced vector.
    fn insert(&mut self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.field;
        let mut v = v.to_vec();
        loop {
            let pivot = match v.iter().rposition(|c| !c.is_zero()) {
                None => return None,
                Some(p) => p,
            };
            match self.rows.iter().position(|r| r.pivot == pivot) {
                None => {
                    let inv = f.inv(&v[pivot]).unwrap();
                    for c in v.iter_mut() {
                        if !c.is_zero() {
                            *c = f.mul(c, &inv).unwrap();
                        }
                    }
                    // keep earlier rows reduced against the new pivot
                    for r in self.rows.iter_mut() {
                        let c = r.vec[pivot].clone();
                        if c.is_zero() {
                            continue;
                        }
                        for k in 0..r.vec.len() {
                            if !v[k].is_zero() {
                                let sub = f.mul(&c, &v[k]).unwrap();
                                r.vec[k] = f.sub(&r.vec[k], &sub).unwrap();
                            }
                        }
                    }
                    self.rows.push(SpanRow { pivot, vec: v.clone() });
                    return Some(v);
                }
                Some(ri) => {
                    let c = v[pivot].clone();
                    let row = &self.rows[ri].vec;
                    for k in 0..v.len() {
                        if !row[k].is_zero() {
                            let sub = f.mul(&c, &row[k]).unwrap();
                            v[k] = f.sub(&v[k], &sub).unwrap();
                        }
                    }
                }
            }
        }
    }

    fn rows(&self) -> Vec<&SpanRow> {
        self.rows.iter().collect()
    }
}

/// Exhaustive associativity check of the multiplication table.
pub fn verify_associativity(alg: &Algebra) -> bool {
    let dim = alg.dim();
    for i in 0..dim {
        for j in 0..dim {
            let ij = alg.mul_basis(i, j).clone();
            for k in 0..dim {
                let jk = alg.mul_basis(j, k).clone();
                let left = alg.mul(&ij, &vec![(k, alg.field().one())]);
                let right = alg.mul(&vec![(i, alg.field().one())], &jk);
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    pub fn dual_numbers(field: Field) -> Algebra {
        let q = Quiver::new(
            1,
            vec![Arrow { label: ArrowLabel::Named("x".into()), source: 0, target: 0 }],
        )
        .unwrap();
        let x2 = PathWord { source: 0, arrows: vec![0, 0] };
        // N = 3 with relation x^2 keeps the quotient {e, x}
        let rel = vec![vec![RelationTerm { coeff: field.one(), word: x2 }]];
        Algebra::build(q, field, &rel, 3).unwrap()
    }

    pub fn a3_quiver(field: Field) -> Algebra {
        let q = Quiver::new(
            3,
            vec![
                Arrow { label: ArrowLabel::Named("u".into()), source: 0, target: 1 },
                Arrow { label: ArrowLabel::Named("v".into()), source: 1, target: 2 },
            ],
        )
        .unwrap();
        Algebra::build(q, field, &[], 3).unwrap()
    }

    #[test]
    fn dual_numbers_dimension() {
        let alg = dual_numbers(Field::prime(2).unwrap());
        assert_eq!(alg.dim(), 2);
        assert!(verify_associativity(&alg));
        // x * x = 0
        let x = alg.basis_index(&PathWord { source: 0, arrows: vec![0] }).unwrap();
        assert!(alg.mul_basis(x, x).is_empty());
    }

    #[test]
    fn a3_dimension_and_corners() {
        let alg = a3_quiver(Field::rational());
        assert_eq!(alg.dim(), 6);
        // corner (2,0): exactly the length-2 path
        let c = alg.corner_basis(2, 0);
        assert_eq!(c.len(), 1);
        assert_eq!(alg.basis_word(c[0]).len(), 2);
        assert_eq!(alg.unique_path(0, 2).unwrap(), c[0]);
    }

    #[test]
    fn unique_path_errors() {
        let alg = dual_numbers(Field::prime(3).unwrap());
        assert!(matches!(alg.unique_path(0, 0), Err(AlgebraError::AmbiguousPath { .. })));
        let a3 = a3_quiver(Field::rational());
        assert!(matches!(a3.unique_path(2, 0), Err(AlgebraError::NoPath { .. })));
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let alg = a3_quiver(Field::prime(5).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                let ei = alg.idempotent(i);
                let ej = alg.idempotent(j);
                let prod = alg.mul_basis(ei, ej);
                if i == j {
                    assert_eq!(prod, &vec![(ei, alg.field().one())]);
                } else {
                    assert!(prod.is_empty());
                }
            }
        }
    }

    #[test]
    fn unit_is_identity() {
        let alg = a3_quiver(Field::prime(5).unwrap());
        let one = alg.unit();
        for b in 0..alg.dim() {
            let x = vec![(b, alg.field().one())];
            assert_eq!(alg.mul(&one, &x), x);
            assert_eq!(alg.mul(&x, &one), x);
        }
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let field = Field::rational();
        let q = Quiver::new(
            2,
            vec![Arrow { label: ArrowLabel::Named("u".into()), source: 0, target: 1 }],
        )
        .unwrap();
        let bad = vec![vec![
            RelationTerm { coeff: field.one(), word: PathWord::idempotent(0) },
            RelationTerm { coeff: field.one(), word: PathWord { source: 0, arrows: vec![0] } },
        ]];
        assert!(matches!(
            Algebra::build(q, field, &bad, 3),
            Err(AlgebraError::NonParallelRelation { .. })
        ));
    }

    #[test]
    fn inadmissible_ideal_reported() {
        let field = Field::rational();
        let q = Quiver::new(1, vec![]).unwrap();
        let bad = vec![vec![RelationTerm { coeff: field.one(), word: PathWord::idempotent(0) }]];
        assert!(matches!(
            Algebra::build(q, field, &bad, 2),
            Err(AlgebraError::NotAdmissible { vertex: 0 })
        ));
    }

    #[test]
    fn dual_numbers_center() {
        // commutative algebra: the center is everything
        let alg = dual_numbers(Field::prime(2).unwrap());
        assert_eq!(alg.center_dim(), 2);
        let a3 = a3_quiver(Field::rational());
        assert_eq!(a3.center_dim(), 1);
    }
}
