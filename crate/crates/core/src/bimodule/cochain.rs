//! The cochain complex induced by `Hom_Lambda(-, A)` and its cohomology.
//!
//! `Hom_Lambda(P_{i,j}, A)` is identified with the corner `e_i A e_j` by
//! evaluating at the generator; the coboundary acts by
//! `(delta f)(col) = sum over entries of a . f(row) . b`.

use super::{BimoduleComplex, ComplexError, ProjectiveIndex};
use crate::algebra::Algebra;
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// Corner-space layout of one cochain group `Hom_Lambda(Q_t, A)`.
pub struct CochainGroup {
    pub summands: Vec<ProjectiveIndex>,
    /// per summand: algebra basis indices of the corner `e_L A e_R`
    pub corners: Vec<Vec<usize>>,
    pub offsets: Vec<usize>,
    pub dim: usize,
}

impl CochainGroup {
    pub fn new(alg: &Algebra, summands: &[ProjectiveIndex]) -> Self {
        let mut corners = Vec::with_capacity(summands.len());
        let mut offsets = Vec::with_capacity(summands.len());
        let mut dim = 0;
        for p in summands {
            let c = alg.corner_basis(p.left, p.right).to_vec();
            offsets.push(dim);
            dim += c.len();
            corners.push(c);
        }
        CochainGroup { summands: summands.to_vec(), corners, offsets, dim }
    }

    /// Coordinate of basis path `w` sitting in summand `k`, if present.
    pub fn coord(&self, k: usize, w: usize) -> Option<usize> {
        self.corners[k].iter().position(|&x| x == w).map(|p| self.offsets[k] + p)
    }
}

/// The complex of K-matrices `delta^t : Hom(Q_t, A) -> Hom(Q_{t+1}, A)`.
pub struct CochainComplex {
    pub field: Field,
    pub groups: Vec<CochainGroup>,
    pub deltas: Vec<Matrix>,
}

impl CochainComplex {
    pub fn dim(&self, t: usize) -> usize {
        self.groups[t].dim
    }

    pub fn delta(&self, t: usize) -> &Matrix {
        &self.deltas[t]
    }

    pub fn is_cocycle(&self, t: usize, f: &[Scalar]) -> bool {
        if t >= self.deltas.len() {
            panic!("complex not available at degree {t}");
        }
        self.deltas[t].apply(f).iter().all(|x| x.is_zero())
    }

    pub fn cohomology(&self, t: usize) -> Cohomology {
        let kernel = self.deltas[t].kernel_basis();
        let boundaries = if t == 0 {
            Matrix::zeros(self.field, 0, self.groups[t].dim)
        } else {
            self.deltas[t - 1].transpose().row_space_basis()
        };
        Cohomology::from_bases(self.field, kernel, boundaries)
    }
}

impl BimoduleComplex {
    /// Apply `Hom_Lambda(-, A)` to the complex, through all available maps.
    pub fn induced_cochain(&self) -> CochainComplex {
        let alg = &*self.algebra;
        let f = *alg.field();
        let groups: Vec<CochainGroup> =
            self.terms.iter().map(|t| CochainGroup::new(alg, t)).collect();
        let mut deltas = Vec::with_capacity(self.maps.len());
        for (t, d) in self.maps.iter().enumerate() {
            let src = &groups[t];
            let dst = &groups[t + 1];
            let mut m = Matrix::zeros(f, dst.dim, src.dim);
            for (&(row, col), entry) in &d.entries {
                // row indexes Q_t (source cochain group), col indexes Q_{t+1}
                for (wpos, &w) in src.corners[row].iter().enumerate() {
                    let src_idx = src.offsets[row] + wpos;
                    for term in entry {
                        // a . w . b, traversed b then w then a
                        let wb = alg.mul_basis(w, term.b);
                        if wb.is_empty() {
                            continue;
                        }
                        let awb = alg.mul(&vec![(term.a, f.one())], wb);
                        for (out, c) in awb {
                            let dst_idx = dst
                                .coord(col, out)
                                .expect("product lands in the codomain corner");
                            let v = f.mul(&term.coeff, &c).unwrap();
                            m.add_to(dst_idx, src_idx, &v);
                        }
                    }
                }
            }
            deltas.push(m);
        }
        CochainComplex { field: f, groups, deltas }
    }
}

/// Cohomology at one degree: canonical representatives plus the coboundary
/// space, with deterministic class vectors.
pub struct Cohomology {
    pub field: Field,
    /// reduced-echelon rows spanning ker delta^t
    pub kernel: Matrix,
    /// reduced-echelon rows spanning im delta^{t-1}
    pub boundaries: Matrix,
    /// reduced-echelon representatives of a complement of the boundaries
    pub representatives: Matrix,
}

impl Cohomology {
    fn from_bases(field: Field, kernel: Matrix, boundaries: Matrix) -> Self {
        let n = kernel.cols();
        // reduce kernel rows against the boundary space; nonzero remainders
        // span a complement, re-echelonized for canonical output
        let mut stacked: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..boundaries.rows() {
            stacked.push(boundaries.row(i).to_vec());
        }
        let b_rows = stacked.len();
        for i in 0..kernel.rows() {
            stacked.push(kernel.row(i).to_vec());
        }
        let m = Matrix::from_rows(field, stacked);
        let (r, pivots) = m.rref();
        // rows beyond the boundary rank belong to the complement
        let mut reps = Vec::new();
        for i in b_rows.min(pivots.len())..pivots.len() {
            reps.push(r.row(i).to_vec());
        }
        let representatives = if reps.is_empty() {
            Matrix::zeros(field, 0, n)
        } else {
            Matrix::from_rows(field, reps).row_space_basis()
        };
        Cohomology { field, kernel, boundaries, representatives }
    }

    pub fn dim(&self) -> usize {
        self.representatives.rows()
    }

    /// Coordinates of a cocycle's class in the representative basis;
    /// `None` when the vector is not in the kernel-plus-boundary span.
    pub fn class_vector(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let h = self.representatives.rows();
        let b = self.boundaries.rows();
        if h == 0 {
            // everything is a boundary; the class vector is empty
            let m = self.boundaries.transpose();
            return m.solve(v).map(|_| Vec::new());
        }
        let n = self.representatives.cols();
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..h {
            cols.push(self.representatives.row(i).to_vec());
        }
        for i in 0..b {
            cols.push(self.boundaries.row(i).to_vec());
        }
        let m = Matrix::from_rows(self.field, cols).transpose();
        debug_assert_eq!(m.rows(), n);
        let x = m.solve(v)?;
        Some(x[..h].to_vec())
    }

    pub fn is_coboundary(&self, v: &[Scalar]) -> bool {
        match self.class_vector(v) {
            None => false,
            Some(cv) => cv.iter().all(|c| c.is_zero()),
        }
    }
}

/// Convenience wrapper: dimension, canonical cocycle representatives, and
/// coboundary basis at one degree.
pub fn cohomology_dim(cx: &BimoduleComplex, t: usize) -> usize {
    cx.induced_cochain().cohomology(t).dim()
}

/// Check a cochain vector shape against the group layout.
pub fn check_cochain(group: &CochainGroup, f: &[Scalar]) -> Result<(), ComplexError> {
    if f.len() != group.dim {
        return Err(ComplexError::BadCochain { got: f.len(), expect: group.dim });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::test_support::dual_numbers_resolution;
    use crate::field::Field;

    #[test]
    fn dual_numbers_cochain_dims() {
        let cx = dual_numbers_resolution(Field::prime(2).unwrap(), 5);
        let cochain = cx.induced_cochain();
        for t in 0..=5 {
            assert_eq!(cochain.dim(t), 2);
        }
    }

    #[test]
    fn dual_numbers_hh_char2() {
        let cx = dual_numbers_resolution(Field::prime(2).unwrap(), 6);
        let cochain = cx.induced_cochain();
        for t in 0..=4 {
            assert_eq!(cochain.cohomology(t).dim(), 2, "t={t}");
        }
    }

    #[test]
    fn dual_numbers_hh_char0() {
        let cx = dual_numbers_resolution(Field::rational(), 6);
        let cochain = cx.induced_cochain();
        let dims: Vec<usize> = (0..=4).map(|t| cochain.cohomology(t).dim()).collect();
        assert_eq!(dims, vec![2, 1, 1, 1, 1]);
    }

    #[test]
    fn class_vectors_kill_boundaries() {
        let cx = dual_numbers_resolution(Field::rational(), 6);
        let cochain = cx.induced_cochain();
        let h1 = cochain.cohomology(1);
        assert_eq!(h1.dim(), 1);
        // delta^0 of anything is a coboundary with zero class vector
        let f = cochain.field;
        let img = cochain.deltas[0].apply(&[f.one(), f.zero()]);
        assert!(h1.is_coboundary(&img));
    }
}
