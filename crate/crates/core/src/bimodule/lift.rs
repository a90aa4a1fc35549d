//! Lifting cocycles to chain maps and multiplying cohomology classes.
//!
//! A `t`-cocycle `f` lifts (uniquely up to homotopy) to a family
//! `phi_k : Q_{t+k} -> Q_k`; the class product is
//! `cl f2 . cl f1 = cl(phi2_0 . phi1_{t2})`. Each lifting square is solved
//! exactly; the particular solution is the first echelon solution, which
//! pins the homotopy freedom down deterministically without affecting any
//! class.

use super::cochain::CochainGroup;
use super::{BimoduleComplex, BimoduleMap, ComplexError, TensorTerm};
use crate::algebra::Algebra;
use crate::field::Scalar;
use crate::matrix::Matrix;
use std::collections::BTreeMap;

/// A lifted family `phi_k : Q_{t+k} -> Q_k`, `k = 0..maps.len()`.
pub struct ChainMap {
    pub start_degree: usize,
    pub maps: Vec<BimoduleMap>,
}

impl ChainMap {
    /// Check every covered lifting square `d_k . phi_{k+1} = phi_k . d_{t+k}`.
    pub fn verify(&self, cx: &BimoduleComplex) -> Result<(), usize> {
        let alg = &*cx.algebra;
        let t = self.start_degree;
        for k in 0..self.maps.len().saturating_sub(1) {
            let lhs = cx.maps[k].compose(alg, &self.maps[k + 1]).expect("shapes");
            let rhs = self.maps[k].compose(alg, &cx.maps[t + k]).expect("shapes");
            if lhs != rhs {
                return Err(k);
            }
        }
        Ok(())
    }
}

/// Typed corner coordinates of a potential column of a `BimoduleMap` into
/// the sum `summands`, with outer typing `(ext_left, ext_right)`.
struct ColumnSpace {
    /// per summand: (basis paths for the left factor, for the right factor)
    pairs: Vec<(Vec<usize>, Vec<usize>)>,
    offsets: Vec<usize>,
    dim: usize,
}

impl ColumnSpace {
    fn new(alg: &Algebra, summands: &[super::ProjectiveIndex], ext_left: usize, ext_right: usize) -> Self {
        let mut pairs = Vec::with_capacity(summands.len());
        let mut offsets = Vec::with_capacity(summands.len());
        let mut dim = 0;
        for p in summands {
            // a: starts at p.left, ends at ext_left; b: starts at ext_right, ends at p.right
            let lefts = alg.paths_from_to(p.left, ext_left).to_vec();
            let rights = alg.paths_from_to(ext_right, p.right).to_vec();
            offsets.push(dim);
            dim += lefts.len() * rights.len();
            pairs.push((lefts, rights));
        }
        ColumnSpace { pairs, offsets, dim }
    }

    fn coord(&self, summand: usize, a: usize, b: usize) -> Option<usize> {
        let (lefts, rights) = &self.pairs[summand];
        let ai = lefts.iter().position(|&x| x == a)?;
        let bi = rights.iter().position(|&x| x == b)?;
        Some(self.offsets[summand] + ai * rights.len() + bi)
    }
}

impl BimoduleComplex {
    /// Construct `phi_0 : Q_t -> Q_0` realizing the cochain `f` through the
    /// augmentation: `eps . phi_0 = f`.
    pub fn lift_degree_zero(&self, t: usize, f: &[Scalar]) -> Result<BimoduleMap, ComplexError> {
        let alg = &*self.algebra;
        let k = alg.field();
        let group = CochainGroup::new(alg, &self.terms[t]);
        super::cochain::check_cochain(&group, f)?;
        let mut phi0 = BimoduleMap::zero(self.terms[t].clone(), self.terms[0].clone());
        for (col, p) in self.terms[t].iter().enumerate() {
            let col_space = ColumnSpace::new(alg, &self.terms[0], p.left, p.right);
            // target coordinates: corner e_L A e_R
            let corner = alg.corner_basis(p.left, p.right);
            let mut m = Matrix::zeros(*k, corner.len(), col_space.dim);
            for (i, (lefts, rights)) in col_space.pairs.iter().enumerate() {
                for (api, &a) in lefts.iter().enumerate() {
                    for (bpi, &b) in rights.iter().enumerate() {
                        let idx = col_space.offsets[i] + api * rights.len() + bpi;
                        for (out, c) in alg.mul_basis(a, b) {
                            let row = corner.iter().position(|x| x == out).expect("corner closed");
                            m.add_to(row, idx, c);
                        }
                    }
                }
            }
            let rhs: Vec<Scalar> = corner
                .iter()
                .map(|&w| {
                    group
                        .coord(col, w)
                        .map(|ix| f[ix].clone())
                        .unwrap_or_else(|| k.zero())
                })
                .collect();
            let x = m.solve(&rhs).ok_or(ComplexError::NoSolution { degree: 0, col })?;
            for (i, (lefts, rights)) in col_space.pairs.iter().enumerate() {
                for (api, &a) in lefts.iter().enumerate() {
                    for (bpi, &b) in rights.iter().enumerate() {
                        let idx = col_space.offsets[i] + api * rights.len() + bpi;
                        if !x[idx].is_zero() {
                            phi0.add_term(
                                alg,
                                i,
                                col,
                                TensorTerm { coeff: x[idx].clone(), a, b },
                            );
                        }
                    }
                }
            }
        }
        phi0.validate(alg).expect("solver output is typed");
        Ok(phi0)
    }

    /// Solve one lifting square: given `prev = phi_k`, produce
    /// `phi_{k+1} : Q_{t+k+1} -> Q_{k+1}` with `d_k . phi_{k+1} = phi_k . d_{t+k}`.
    pub fn lift_step(
        &self,
        t: usize,
        kdeg: usize,
        prev: &BimoduleMap,
    ) -> Result<BimoduleMap, ComplexError> {
        let alg = &*self.algebra;
        let field = alg.field();
        let rhs_map = prev.compose(alg, &self.maps[t + kdeg]).expect("chain shapes");
        let dom = &self.terms[t + kdeg + 1];
        let mut phi = BimoduleMap::zero(dom.clone(), self.terms[kdeg + 1].clone());
        // cache the square's system matrix per external typing
        let mut cache: BTreeMap<(usize, usize), (ColumnSpace, ColumnSpace, Matrix)> = BTreeMap::new();
        for (col, p) in dom.iter().enumerate() {
            let key = (p.left, p.right);
            if !cache.contains_key(&key) {
                let unknowns = ColumnSpace::new(alg, &self.terms[kdeg + 1], p.left, p.right);
                let targets = ColumnSpace::new(alg, &self.terms[kdeg], p.left, p.right);
                let mut m = Matrix::zeros(*field, targets.dim, unknowns.dim);
                for (&(row, mid), entry) in &self.maps[kdeg].entries {
                    let (lefts, rights) = &unknowns.pairs[mid];
                    for (api, &az) in lefts.iter().enumerate() {
                        for (bpi, &bz) in rights.iter().enumerate() {
                            let cidx = unknowns.offsets[mid] + api * rights.len() + bpi;
                            for term in entry {
                                // (a_z (x) b_z) . (a_d (x) b_d) = a_z a_d (x) b_d b_z
                                let aa = alg.mul_basis(az, term.a);
                                if aa.is_empty() {
                                    continue;
                                }
                                let bb = alg.mul_basis(term.b, bz);
                                if bb.is_empty() {
                                    continue;
                                }
                                for (x, cx) in aa {
                                    for (y, cy) in bb {
                                        let ridx = targets
                                            .coord(row, *x, *y)
                                            .expect("image stays typed");
                                        let c = field
                                            .mul(&field.mul(&term.coeff, cx).unwrap(), cy)
                                            .unwrap();
                                        m.add_to(ridx, cidx, &c);
                                    }
                                }
                            }
                        }
                    }
                }
                cache.insert(key, (unknowns, targets, m));
            }
            let (unknowns, targets, m) = cache.get(&key).unwrap();
            let mut rhs = vec![field.zero(); targets.dim];
            for (&(row, c2), entry) in &rhs_map.entries {
                if c2 != col {
                    continue;
                }
                for term in entry {
                    let idx = targets.coord(row, term.a, term.b).expect("rhs typed");
                    rhs[idx] = field.add(&rhs[idx], &term.coeff).unwrap();
                }
            }
            let x = m
                .solve(&rhs)
                .ok_or(ComplexError::NoSolution { degree: kdeg + 1, col })?;
            for (i, (lefts, rights)) in unknowns.pairs.iter().enumerate() {
                for (api, &a) in lefts.iter().enumerate() {
                    for (bpi, &b) in rights.iter().enumerate() {
                        let idx = unknowns.offsets[i] + api * rights.len() + bpi;
                        if !x[idx].is_zero() {
                            phi.add_term(alg, i, col, TensorTerm { coeff: x[idx].clone(), a, b });
                        }
                    }
                }
            }
        }
        phi.validate(alg).expect("solver output is typed");
        Ok(phi)
    }

    /// Lift a cocycle at degree `t` through `horizon` squares.
    pub fn lift_cocycle(&self, t: usize, f: &[Scalar], horizon: usize) -> Result<ChainMap, ComplexError> {
        assert!(
            t + horizon <= self.available_through() - 1,
            "complex too short: need degree {} of {}",
            t + horizon,
            self.available_through()
        );
        let mut maps = vec![self.lift_degree_zero(t, f)?];
        for k in 0..horizon {
            let next = self.lift_step(t, k, &maps[k])?;
            maps.push(next);
        }
        Ok(ChainMap { start_degree: t, maps })
    }

    /// Convert a map `psi : Q_T -> Q_0` to the cochain `eps . psi`.
    pub fn cochain_of_map(&self, psi: &BimoduleMap, t: usize) -> Vec<Scalar> {
        let alg = &*self.algebra;
        let field = alg.field();
        let group = CochainGroup::new(alg, &self.terms[t]);
        let mut out = vec![field.zero(); group.dim];
        for (&(_row, col), entry) in &psi.entries {
            for term in entry {
                for (w, c) in alg.mul_basis(term.a, term.b) {
                    let idx = group.coord(col, *w).expect("augmentation lands in the corner");
                    out[idx] = field.add_mul(&out[idx], &term.coeff, c).unwrap();
                }
            }
        }
        out
    }

    /// The cup product `cl f2 . cl f1` as a cochain at degree `t1 + t2`,
    /// using a precomputed lift of `f1` through at least `t2` squares.
    pub fn cup_cochain(
        &self,
        phi2_0: &BimoduleMap,
        lift1: &ChainMap,
        t2: usize,
    ) -> Result<Vec<Scalar>, ComplexError> {
        let alg = &*self.algebra;
        let t1 = lift1.start_degree;
        assert!(lift1.maps.len() > t2, "lift of f1 too short for degree {t2}");
        let comp = phi2_0.compose(alg, &lift1.maps[t2])?;
        Ok(self.cochain_of_map(&comp, t1 + t2))
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_support::dual_numbers_resolution;
    use super::*;
    use crate::field::Field;

    #[test]
    fn unit_cocycle_identity_chain_map_is_a_lift() {
        let cx = dual_numbers_resolution(Field::prime(3).unwrap(), 5);
        let alg = &*cx.algebra;
        // the unit cochain at t = 0: each diagonal summand maps to its idempotent
        let cochain = cx.induced_cochain();
        let f = cx.cochain_of_map(&BimoduleMap::identity(alg, cx.terms[0].clone()), 0);
        assert!(cochain.is_cocycle(0, &f));
        let ident = ChainMap {
            start_degree: 0,
            maps: (0..=4).map(|k| BimoduleMap::identity(alg, cx.terms[k].clone())).collect(),
        };
        assert_eq!(ident.verify(&cx), Ok(()));
        // and phi_0 = identity realizes f through the augmentation
        assert_eq!(cx.cochain_of_map(&ident.maps[0], 0), f);
    }

    #[test]
    fn lift_degree_one_generator_char2() {
        let cx = dual_numbers_resolution(Field::prime(2).unwrap(), 8);
        let cochain = cx.induced_cochain();
        let h1 = cochain.cohomology(1);
        assert_eq!(h1.dim(), 2);
        // take a representative cocycle and lift it through 4 squares
        let f = h1.representatives.row(0).to_vec();
        let lift = cx.lift_cocycle(1, &f, 4).unwrap();
        assert_eq!(lift.verify(&cx), Ok(()));
        assert_eq!(cx.cochain_of_map(&lift.maps[0], 1), f);
    }

    #[test]
    fn cup_with_unit_is_identity_on_classes() {
        let cx = dual_numbers_resolution(Field::prime(2).unwrap(), 8);
        let cochain = cx.induced_cochain();
        let alg = &*cx.algebra;
        let unit = cx.cochain_of_map(&BimoduleMap::identity(alg, cx.terms[0].clone()), 0);
        let unit0 = cx.lift_degree_zero(0, &unit).unwrap();
        for t in 1..=3 {
            let h = cochain.cohomology(t);
            for r in 0..h.dim() {
                let f = h.representatives.row(r).to_vec();
                let lift = cx.lift_cocycle(t, &f, 0).unwrap();
                // unit . f: phi2_0 = unit's phi_0 (t2 = 0)
                let prod = cx.cup_cochain(&unit0, &lift, 0).unwrap();
                let cl_f = h.class_vector(&f).unwrap();
                let cl_p = h.class_vector(&prod).unwrap();
                assert_eq!(cl_f, cl_p, "t={t} r={r}");
            }
        }
    }

    #[test]
    fn dual_numbers_cup_square_char2() {
        // in char 2 the degree-1 generator squares to the degree-2 generator
        let cx = dual_numbers_resolution(Field::prime(2).unwrap(), 8);
        let cochain = cx.induced_cochain();
        let h1 = cochain.cohomology(1);
        // pick the representative that is not the boundary-ish one: both work
        let f = h1.representatives.row(0).to_vec();
        let lift = cx.lift_cocycle(1, &f, 2).unwrap();
        let phi0 = &lift.maps[0];
        let prod = cx.cup_cochain(phi0, &lift, 1).unwrap();
        assert!(cochain.is_cocycle(2, &prod));
    }
}
