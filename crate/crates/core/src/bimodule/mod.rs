//! Complexes of projective bimodules over the enveloping algebra, their
//! underlying exact linear algebra, and the induced Hom(-, A) machinery.
//!
//! A projective bimodule summand `P_{i,j}` is identified with
//! `A e_i (x) e_j A`; a map between direct sums of these is a sparse matrix
//! of tensor entries, multiplied against column vectors from the right.
//! For an entry of a map `P_{c1,c2} -> P_{r1,r2}`, the left tensor factor
//! is a path from `r1` to `c1` and the right factor a path from `c2` to
//! `r2` (paths compose right-to-left throughout).

pub mod cochain;
pub mod io;
pub mod lift;

use crate::algebra::{Algebra, LinComb};
use crate::field::Scalar;
use crate::matrix::Matrix;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("domain/codomain mismatch in composition: {0} vs {1}")]
    ComposeMismatch(usize, usize),
    #[error("entry at row {row}, col {col} is not a legal bimodule homomorphism component")]
    BadEntry { row: usize, col: usize },
    #[error("no solution lifting degree {degree}, column {col}")]
    NoSolution { degree: usize, col: usize },
    #[error("cochain vector has wrong length: {got} (expected {expect})")]
    BadCochain { got: usize, expect: usize },
    #[error("not a cocycle at degree {degree}")]
    NotACocycle { degree: usize },
}

/// Index pair `(i, j)` of an indecomposable projective bimodule `P_{i,j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectiveIndex {
    pub left: usize,
    pub right: usize,
}

impl ProjectiveIndex {
    pub fn new(left: usize, right: usize) -> Self {
        ProjectiveIndex { left, right }
    }
}

/// `dim_K P_{i,j} = dim(A e_i) * dim(e_j A)`.
pub fn projective_dim(alg: &Algebra, p: ProjectiveIndex) -> usize {
    left_module_basis(alg, p.left).len() * right_module_basis(alg, p.right).len()
}

/// Basis of `A e_i`: paths starting at `i`.
pub fn left_module_basis(alg: &Algebra, i: usize) -> Vec<usize> {
    (0..alg.dim()).filter(|&b| alg.source_of(b) == i).collect()
}

/// Basis of `e_j A`: paths ending at `j`.
pub fn right_module_basis(alg: &Algebra, j: usize) -> Vec<usize> {
    (0..alg.dim()).filter(|&b| alg.target_of(b) == j).collect()
}

/// One `coeff * (a (x) b)` term; `a`, `b` are algebra basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorTerm {
    pub coeff: Scalar,
    pub a: usize,
    pub b: usize,
}

pub type TensorEntry = Vec<TensorTerm>;

fn canonicalize(alg: &Algebra, terms: Vec<TensorTerm>) -> TensorEntry {
    let f = alg.field();
    let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
    for t in terms {
        let e = acc.entry((t.a, t.b)).or_insert_with(|| f.zero());
        *e = f.add(e, &t.coeff).unwrap();
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((a, b), coeff)| TensorTerm { coeff, a, b })
        .collect()
}

/// A map between finite direct sums of projective bimodules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleMap {
    pub domain: Vec<ProjectiveIndex>,
    pub codomain: Vec<ProjectiveIndex>,
    /// (row, col) -> entry; rows index the codomain, columns the domain
    pub entries: BTreeMap<(usize, usize), TensorEntry>,
}

impl BimoduleMap {
    pub fn zero(domain: Vec<ProjectiveIndex>, codomain: Vec<ProjectiveIndex>) -> Self {
        BimoduleMap { domain, codomain, entries: BTreeMap::new() }
    }

    pub fn identity(alg: &Algebra, indices: Vec<ProjectiveIndex>) -> Self {
        let one = alg.field().one();
        let entries = indices
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let e_l = alg.idempotent(p.left);
                let e_r = alg.idempotent(p.right);
                ((k, k), vec![TensorTerm { coeff: one.clone(), a: e_l, b: e_r }])
            })
            .collect();
        BimoduleMap { domain: indices.clone(), codomain: indices, entries }
    }

    pub fn add_term(&mut self, alg: &Algebra, row: usize, col: usize, term: TensorTerm) {
        let entry = self.entries.entry((row, col)).or_default();
        entry.push(term);
        let cleaned = canonicalize(alg, std::mem::take(entry));
        if cleaned.is_empty() {
            self.entries.remove(&(row, col));
        } else {
            *self.entries.get_mut(&(row, col)).unwrap() = cleaned;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Check that every term of every entry is typed by its row and column.
    pub fn validate(&self, alg: &Algebra) -> Result<(), ComplexError> {
        for (&(row, col), entry) in &self.entries {
            if row >= self.codomain.len() || col >= self.domain.len() {
                return Err(ComplexError::BadEntry { row, col });
            }
            let r = self.codomain[row];
            let c = self.domain[col];
            for t in entry {
                let a_ok = alg.source_of(t.a) == r.left && alg.target_of(t.a) == c.left;
                let b_ok = alg.source_of(t.b) == c.right && alg.target_of(t.b) == r.right;
                if !a_ok || !b_ok {
                    return Err(ComplexError::BadEntry { row, col });
                }
            }
        }
        Ok(())
    }

    /// `self` after `other`: requires `self.domain == other.codomain`.
    pub fn compose(&self, alg: &Algebra, other: &BimoduleMap) -> Result<BimoduleMap, ComplexError> {
        if self.domain != other.codomain {
            return Err(ComplexError::ComposeMismatch(self.domain.len(), other.codomain.len()));
        }
        let f = alg.field();
        let mut out = BimoduleMap::zero(other.domain.clone(), self.codomain.clone());
        // group other's entries by column for cache-friendliness
        for (&(mid_o, col), entry_o) in &other.entries {
            for (&(row, mid_f), entry_f) in &self.entries {
                if mid_f != mid_o {
                    continue;
                }
                let mut terms = Vec::new();
                for tg in entry_o {
                    for tf in entry_f {
                        // (a_g (x) b_g) * (a_f (x) b_f) = a_g a_f (x) b_f b_g
                        let c = f.mul(&tg.coeff, &tf.coeff).unwrap();
                        let aa = alg.mul_basis(tg.a, tf.a);
                        if aa.is_empty() {
                            continue;
                        }
                        let bb = alg.mul_basis(tf.b, tg.b);
                        if bb.is_empty() {
                            continue;
                        }
                        for (ai, ac) in aa {
                            for (bi, bc) in bb {
                                let coeff =
                                    f.mul(&f.mul(&c, ac).unwrap(), bc).unwrap();
                                terms.push(TensorTerm { coeff, a: *ai, b: *bi });
                            }
                        }
                    }
                }
                if !terms.is_empty() {
                    let entry = out.entries.entry((row, col)).or_default();
                    entry.extend(terms);
                }
            }
        }
        let keys: Vec<(usize, usize)> = out.entries.keys().cloned().collect();
        for k in keys {
            let entry = std::mem::take(out.entries.get_mut(&k).unwrap());
            let cleaned = canonicalize(alg, entry);
            if cleaned.is_empty() {
                out.entries.remove(&k);
            } else {
                *out.entries.get_mut(&k).unwrap() = cleaned;
            }
        }
        Ok(out)
    }

    /// The K-linear map between underlying vector spaces, in the product
    /// bases `{p (x) q}` ordered summand by summand.
    pub fn underlying_matrix(&self, alg: &Algebra) -> Matrix {
        let layout_dom = SumLayout::new(alg, &self.domain);
        let layout_cod = SumLayout::new(alg, &self.codomain);
        let f = alg.field();
        let mut m = Matrix::zeros(*f, layout_cod.dim, layout_dom.dim);
        for (&(row, col), entry) in &self.entries {
            let dom = &layout_dom.summands[col];
            for (pi, &p) in dom.left_basis.iter().enumerate() {
                for (qi, &q) in dom.right_basis.iter().enumerate() {
                    let col_idx = layout_dom.offsets[col] + pi * dom.right_basis.len() + qi;
                    // (p (x) q) . (a (x) b) = p a (x) b q
                    for t in entry {
                        let pa = alg.mul_basis(p, t.a);
                        if pa.is_empty() {
                            continue;
                        }
                        let bq = alg.mul_basis(t.b, q);
                        if bq.is_empty() {
                            continue;
                        }
                        for (x, cx) in pa {
                            for (y, cy) in bq {
                                let row_idx = layout_cod.index_of(row, *x, *y);
                                let c = f
                                    .mul(&f.mul(&t.coeff, cx).unwrap(), cy)
                                    .unwrap();
                                m.add_to(row_idx, col_idx, &c);
                            }
                        }
                    }
                }
            }
        }
        m
    }
}

/// Underlying-space layout of a direct sum of projectives.
pub struct SumLayout {
    pub summands: Vec<SummandLayout>,
    pub offsets: Vec<usize>,
    pub dim: usize,
}

pub struct SummandLayout {
    pub index: ProjectiveIndex,
    pub left_basis: Vec<usize>,
    pub right_basis: Vec<usize>,
    /// position of a basis element within left_basis/right_basis
    left_pos: BTreeMap<usize, usize>,
    right_pos: BTreeMap<usize, usize>,
}

impl SumLayout {
    pub fn new(alg: &Algebra, indices: &[ProjectiveIndex]) -> Self {
        let mut summands = Vec::with_capacity(indices.len());
        let mut offsets = Vec::with_capacity(indices.len());
        let mut dim = 0;
        for &p in indices {
            let left_basis = left_module_basis(alg, p.left);
            let right_basis = right_module_basis(alg, p.right);
            let left_pos = left_basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
            let right_pos = right_basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
            offsets.push(dim);
            dim += left_basis.len() * right_basis.len();
            summands.push(SummandLayout { index: p, left_basis, right_basis, left_pos, right_pos });
        }
        SumLayout { summands, offsets, dim }
    }

    pub fn index_of(&self, summand: usize, p: usize, q: usize) -> usize {
        let s = &self.summands[summand];
        self.offsets[summand] + s.left_pos[&p] * s.right_basis.len() + s.right_pos[&q]
    }
}

/// A chain of projective bimodules `... -> Q_1 -> Q_0` with the
/// multiplication augmentation `Q_0 -> A`.
pub struct BimoduleComplex {
    pub algebra: Arc<Algebra>,
    /// terms[t] = summand list of Q_t
    pub terms: Vec<Vec<ProjectiveIndex>>,
    /// maps[t] : Q_{t+1} -> Q_t
    pub maps: Vec<BimoduleMap>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub entries: Vec<ExactnessEntry>,
    pub augmentation_onto: bool,
    pub exact_at_q0: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessEntry {
    pub degree: usize,
    pub dim: usize,
    pub rank_out: usize,
    pub rank_in: usize,
    pub exact: bool,
}

impl ExactnessReport {
    pub fn all_exact(&self) -> bool {
        self.augmentation_onto && self.exact_at_q0 && self.entries.iter().all(|e| e.exact)
    }
}

impl BimoduleComplex {
    pub fn new(algebra: Arc<Algebra>, terms: Vec<Vec<ProjectiveIndex>>, maps: Vec<BimoduleMap>) -> Self {
        assert_eq!(terms.len(), maps.len() + 1);
        BimoduleComplex { algebra, terms, maps }
    }

    pub fn available_through(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn map(&self, t: usize) -> &BimoduleMap {
        &self.maps[t]
    }

    /// Underlying matrix of the augmentation `Q_0 -> A`, rows in the
    /// algebra basis.
    pub fn augmentation_matrix(&self) -> Matrix {
        let alg = &*self.algebra;
        let f = alg.field();
        let layout = SumLayout::new(alg, &self.terms[0]);
        let mut m = Matrix::zeros(*f, alg.dim(), layout.dim);
        for (k, s) in layout.summands.iter().enumerate() {
            for (pi, &p) in s.left_basis.iter().enumerate() {
                for (qi, &q) in s.right_basis.iter().enumerate() {
                    let col = layout.offsets[k] + pi * s.right_basis.len() + qi;
                    for (x, c) in alg.mul_basis(p, q) {
                        m.add_to(*x, col, c);
                    }
                }
            }
        }
        m
    }

    /// `d_t . d_{t+1} = 0` for all covered degrees; returns the first
    /// offender if any.
    pub fn verify_d_squared(&self, through_degree: usize) -> Result<(), usize> {
        let alg = &*self.algebra;
        for t in 0..through_degree.min(self.maps.len().saturating_sub(1)) {
            let prod = self.maps[t].compose(alg, &self.maps[t + 1]).expect("chain shapes");
            if !prod.is_zero() {
                return Err(t);
            }
        }
        // augmentation composes to zero with d_0
        if !self.maps.is_empty() {
            let eps = self.augmentation_matrix();
            let d0 = self.maps[0].underlying_matrix(alg);
            if !eps.mul(&d0).is_zero() {
                return Err(0);
            }
        }
        Ok(())
    }

    /// Rank-identity exactness check through `through_degree`. Over the
    /// rationals, ranks are first computed modulo an auxiliary prime; the
    /// inequality sandwich `rank_q <= rank_Q` together with `d^2 = 0` makes
    /// a matching rank sum a proof of exactness, and only the failing
    /// degrees fall back to exact rational ranks.
    pub fn verify_exactness(&self, through_degree: usize) -> ExactnessReport {
        let alg = &*self.algebra;
        let aux_prime = 1_000_003u64;
        let upto = through_degree.min(self.maps.len() - 1);
        let dims: Vec<usize> = (0..=upto + 1)
            .map(|t| SumLayout::new(alg, &self.terms[t]).dim)
            .collect();
        let mats: Vec<Matrix> = (0..=upto).map(|t| self.maps[t].underlying_matrix(alg)).collect();
        let mut ranks: Vec<usize> = Vec::new();
        let mut modular: Vec<bool> = Vec::new();
        for m in &mats {
            match m.rank_mod(aux_prime) {
                Some(r) => {
                    ranks.push(r);
                    modular.push(true);
                }
                None => {
                    ranks.push(m.rank());
                    modular.push(false);
                }
            }
        }
        let eps = self.augmentation_matrix();
        let mut eps_rank = eps.rank_mod(aux_prime).unwrap_or_else(|| eps.rank());
        if eps_rank != alg.dim() {
            eps_rank = eps.rank();
        }
        let augmentation_onto = eps_rank == alg.dim();
        let mut exact_at_q0 = eps_rank + ranks[0] == dims[0];
        if !exact_at_q0 && modular[0] {
            let r0 = mats[0].rank();
            if eps.rank() + r0 == dims[0] {
                exact_at_q0 = true;
                ranks[0] = r0;
            }
        }
        let mut entries = Vec::new();
        for t in 0..upto {
            let mut rank_out = ranks[t];
            let mut rank_in = ranks[t + 1];
            let mut exact = rank_out + rank_in == dims[t + 1];
            if !exact && (modular[t] || modular[t + 1]) {
                rank_out = mats[t].rank();
                rank_in = mats[t + 1].rank();
                exact = rank_out + rank_in == dims[t + 1];
                ranks[t] = rank_out;
                ranks[t + 1] = rank_in;
            }
            entries.push(ExactnessEntry { degree: t + 1, dim: dims[t + 1], rank_out, rank_in, exact });
        }
        ExactnessReport { entries, augmentation_onto, exact_at_q0 }
    }
}

/// Helpers for building single tensor terms out of algebra elements.
pub fn tensor(alg: &Algebra, coeff: Scalar, a: &LinComb, b: &LinComb) -> TensorEntry {
    let f = alg.field();
    let mut terms = Vec::new();
    for (ai, ca) in a {
        for (bi, cb) in b {
            let c = f.mul(&f.mul(&coeff, ca).unwrap(), cb).unwrap();
            terms.push(TensorTerm { coeff: c, a: *ai, b: *bi });
        }
    }
    canonicalize(alg, terms)
}

#[cfg(test)]
pub mod test_support {
    use super::*;
    use crate::algebra::{Arrow, ArrowLabel, PathWord, Quiver, RelationTerm};
    use crate::field::Field;

    pub fn dual_numbers(field: Field) -> Algebra {
        let q = Quiver::new(
            1,
            vec![Arrow { label: ArrowLabel::Named("x".into()), source: 0, target: 0 }],
        )
        .unwrap();
        let x2 = PathWord { source: 0, arrows: vec![0, 0] };
        let rel = vec![vec![RelationTerm { coeff: field.one(), word: x2 }]];
        Algebra::build(q, field, &rel, 3).unwrap()
    }

    /// The classical 2-periodic bimodule resolution of the dual numbers:
    /// every term is P_{0,0}, d alternates x(x)1 - 1(x)x and x(x)1 + 1(x)x.
    pub fn dual_numbers_resolution(field: Field, length: usize) -> BimoduleComplex {
        let alg = Arc::new(dual_numbers(field));
        let f = alg.field();
        let x = alg.basis_index(&PathWord { source: 0, arrows: vec![0] }).unwrap();
        let e = alg.idempotent(0);
        let p = ProjectiveIndex::new(0, 0);
        let terms = vec![vec![p]; length + 1];
        let mut maps = Vec::new();
        for t in 0..length {
            let mut m = BimoduleMap::zero(vec![p], vec![p]);
            m.add_term(&alg, 0, 0, TensorTerm { coeff: f.one(), a: x, b: e });
            let sign = if t % 2 == 0 { f.from_i64(-1) } else { f.one() };
            m.add_term(&alg, 0, 0, TensorTerm { coeff: sign, a: e, b: x });
            m.validate(&alg).unwrap();
            maps.push(m);
        }
        BimoduleComplex::new(alg, terms, maps)
    }
}

#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;
    use crate::field::Field;

    #[test]
    fn projective_dims() {
        let alg = dual_numbers(Field::prime(2).unwrap());
        assert_eq!(projective_dim(&alg, ProjectiveIndex::new(0, 0)), 4);
    }

    #[test]
    fn identity_composes_to_itself() {
        let field = Field::prime(3).unwrap();
        let cx = dual_numbers_resolution(field, 3);
        let alg = &*cx.algebra;
        let id = BimoduleMap::identity(alg, cx.terms[1].clone());
        let d0 = cx.map(0);
        let left = d0.compose(alg, &id).unwrap();
        assert_eq!(&left, d0);
    }

    #[test]
    fn dual_numbers_d_squared_zero() {
        let field = Field::prime(3).unwrap();
        let cx = dual_numbers_resolution(field, 6);
        assert_eq!(cx.verify_d_squared(6), Ok(()));
    }

    #[test]
    fn dual_numbers_exact() {
        for field in [Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::rational()] {
            let cx = dual_numbers_resolution(field, 7);
            let report = cx.verify_exactness(6);
            assert!(report.all_exact(), "{report:?}");
        }
    }

    #[test]
    fn corrupted_sign_caught_by_validator() {
        let field = Field::prime(3).unwrap();
        let mut cx = dual_numbers_resolution(field, 7);
        assert_eq!(cx.verify_d_squared(6), Ok(()));
        // flip one sign in d_3; the combined validator (d^2 = 0, then the
        // rank identity) must localize the damage at the squares touching d_3
        let alg = cx.algebra.clone();
        let f = alg.field();
        let entry = cx.maps[3].entries.get_mut(&(0, 0)).unwrap();
        entry[0].coeff = f.neg(&entry[0].coeff).unwrap();
        match cx.verify_d_squared(6) {
            Ok(()) => panic!("mutation not detected"),
            Err(t) => assert!(t == 2 || t == 3, "unexpected degree {t}"),
        }
    }

    #[test]
    fn underlying_matrix_functorial() {
        let field = Field::prime(5).unwrap();
        let cx = dual_numbers_resolution(field, 4);
        let alg = &*cx.algebra;
        let prod = cx.maps[0].compose(alg, &cx.maps[1]).unwrap();
        let lhs = prod.underlying_matrix(alg);
        let rhs = cx.maps[0].underlying_matrix(alg).mul(&cx.maps[1].underlying_matrix(alg));
        assert_eq!(lhs, rhs);
        assert!(lhs.is_zero());
    }
}
