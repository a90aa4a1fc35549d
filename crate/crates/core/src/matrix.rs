//! Dense matrices over an exact field, with deterministic Gaussian
//! elimination: rank, reduced echelon form, kernel bases and linear solves.
//!
//! Pivoting always picks the first nonzero entry, so echelon forms (and
//! everything derived from them) are reproducible across runs.

use crate::field::{Field, FieldSpec, Scalar};
use num::{BigInt, BigRational, Integer, One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        let data = rows.into_iter().flatten().collect();
        Matrix { field, rows: r, cols: c, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        let cur = self.get(i, j).clone();
        let s = self.field.add(&cur, v).expect("same field");
        self.set(i, j, s);
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        assert_eq!(self.field, other.field);
        let f = &self.field;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    let v = f.add_mul(&cur, a, b).unwrap();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        match self.field.spec() {
            FieldSpec::Prime(p) => {
                let mut data: Vec<u64> = self
                    .data
                    .iter()
                    .map(|s| match s {
                        Scalar::Fp(v) => *v,
                        _ => unreachable!(),
                    })
                    .collect();
                let pivots = rref_fp(&mut data, self.rows, self.cols, p);
                let out = Matrix {
                    field: self.field,
                    rows: self.rows,
                    cols: self.cols,
                    data: data.into_iter().map(Scalar::Fp).collect(),
                };
                (out, pivots)
            }
            FieldSpec::Rational => {
                let mut data: Vec<BigRational> = self
                    .data
                    .iter()
                    .map(|s| match s {
                        Scalar::Rat(v) => v.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                let pivots = rref_rat(&mut data, self.rows, self.cols);
                let out = Matrix {
                    field: self.field,
                    rows: self.rows,
                    cols: self.cols,
                    data: data.into_iter().map(Scalar::Rat).collect(),
                };
                (out, pivots)
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the row space, as the nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let mut rows = Vec::with_capacity(pivots.len());
        for i in 0..pivots.len() {
            rows.push(r.row(i).to_vec());
        }
        Matrix::from_rows(self.field, rows)
    }

    /// Basis of the right kernel `{x : M x = 0}`, one vector per row,
    /// canonicalized to reduced echelon form.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let f = &self.field;
        let mut rows = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                let entry = r.get(i, free);
                if !entry.is_zero() {
                    v[pc] = f.neg(entry).unwrap();
                }
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Matrix::zeros(self.field, 0, self.cols);
        }
        Matrix::from_rows(self.field, rows).row_space_basis()
    }

    /// First echelon solution of `M x = b` (free variables set to zero);
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols);
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() || x[j].is_zero() {
                    continue;
                }
                out[i] = f.add_mul(&out[i], a, &x[j]).unwrap();
            }
        }
        out
    }

    /// For a rational matrix: clear denominators row by row (rank preserving)
    /// and compute the rank over GF(q). Returns `None` when an entry does not
    /// survive reduction (denominator hits q, or a numerator overflows).
    ///
    /// `rank_mod(q) <= rank over Q` always holds, which is what the exactness
    /// sandwich argument needs.
    pub fn rank_mod(&self, q: u64) -> Option<usize> {
        if self.field.spec() != FieldSpec::Rational {
            return Some(self.rank());
        }
        let qb = BigInt::from(q);
        let mut data: Vec<u64> = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                if let Scalar::Rat(r) = self.get(i, j) {
                    lcm = lcm.lcm(r.denom());
                }
            }
            if (&lcm % &qb).is_zero() {
                return None;
            }
            for j in 0..self.cols {
                if let Scalar::Rat(r) = self.get(i, j) {
                    let n = r.numer() * (&lcm / r.denom());
                    let m = n.mod_floor(&qb);
                    data.push(m.to_u64()?);
                } else {
                    unreachable!()
                }
            }
        }
        let pivots = rref_fp(&mut data, self.rows, self.cols, q);
        Some(pivots.len())
    }
}

fn rref_fp(data: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let inv = |a: u64| -> u64 {
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        t.rem_euclid(p as i128) as u64
    };
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let mut piv = None;
        for i in row..rows {
            if data[i * cols + col] != 0 {
                piv = Some(i);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        if piv != row {
            for j in 0..cols {
                data.swap(row * cols + j, piv * cols + j);
            }
        }
        let pinv = inv(data[row * cols + col]);
        if pinv != 1 {
            for j in col..cols {
                data[row * cols + j] = data[row * cols + j] * pinv % p;
            }
        }
        for i in 0..rows {
            if i == row {
                continue;
            }
            let factor = data[i * cols + col];
            if factor == 0 {
                continue;
            }
            let neg = p - factor;
            for j in col..cols {
                data[i * cols + j] = (data[i * cols + j] + neg * data[row * cols + j]) % p;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn rref_rat(data: &mut [BigRational], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let mut piv = None;
        for i in row..rows {
            if !data[i * cols + col].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        if piv != row {
            for j in 0..cols {
                data.swap(row * cols + j, piv * cols + j);
            }
        }
        let pinv = data[row * cols + col].clone().recip();
        if !pinv.is_one() {
            for j in col..cols {
                let v = &data[row * cols + j] * &pinv;
                data[row * cols + j] = v;
            }
        }
        for i in 0..rows {
            if i == row {
                continue;
            }
            let factor = data[i * cols + col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in col..cols {
                let v = &data[i * cols + j] - &factor * &data[row * cols + j];
                data[i * cols + j] = v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn mat_i64(f: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            f,
            rows.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect(),
        )
    }

    #[test]
    fn identity_rank() {
        assert_eq!(Matrix::identity(gf(2), 3).rank(), 3);
    }

    #[test]
    fn zero_rank() {
        assert_eq!(Matrix::zeros(gf(5), 4, 7).rank(), 0);
        assert_eq!(Matrix::zeros(Field::rational(), 0, 3).rank(), 0);
    }

    #[test]
    fn proportional_rows_over_q() {
        let m = mat_i64(Field::rational(), &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_dimension() {
        let m = mat_i64(Field::rational(), &[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        for i in 0..k.rows() {
            let img = m.apply(k.row(i));
            assert!(img.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_consistent() {
        let f = gf(7);
        let m = mat_i64(f, &[&[1, 1, 0], &[0, 1, 1]]);
        let b = vec![f.from_i64(3), f.from_i64(5)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        // free variable pinned to zero for determinism
        assert!(x[2].is_zero());
    }

    #[test]
    fn solve_inconsistent() {
        let f = gf(7);
        let m = mat_i64(f, &[&[1, 1], &[1, 1]]);
        let b = vec![f.from_i64(1), f.from_i64(2)];
        assert!(m.solve(&b).is_none());
    }

    #[test]
    fn rank_mod_matches_rational_rank() {
        let m = mat_i64(Field::rational(), &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_mod(1_000_003), Some(2));
    }
}
