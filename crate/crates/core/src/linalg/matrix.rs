//! Dense matrices over a [`FieldSpec`] with exact row reduction.
//!
//! Storage is specialised per field so that prime-field kernels run on plain
//! `u64` residues; the public surface works with [`Scalar`].

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::field::{inv_mod, mul_mod, FieldSpec, Scalar};
use crate::error::{Error, Result};

trait Arith {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
}

struct ModP(u64);

impl Arith for ModP {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.0)
    }
    fn inv(&self, a: &u64) -> u64 {
        inv_mod(*a, self.0)
    }
}

struct Rat;

impl Arith for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Data {
    Mod(u64, Vec<u64>),
    Rat(Vec<BigRational>),
}

/// A `rows × cols` matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Data,
}

fn rref_generic<A: Arith>(a: &A, m: &mut [A::E], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a.is_zero(&m[i * cols + c])) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                m.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = a.inv(&m[r * cols + c]);
        for j in c..cols {
            m[r * cols + j] = a.mul(&m[r * cols + j], &inv);
        }
        for i in 0..rows {
            if i == r || a.is_zero(&m[i * cols + c]) {
                continue;
            }
            let factor = m[i * cols + c].clone();
            for j in c..cols {
                if a.is_zero(&m[r * cols + j]) {
                    continue;
                }
                let t = a.mul(&factor, &m[r * cols + j]);
                m[i * cols + j] = a.sub(&m[i * cols + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn matmul_generic<A: Arith>(
    a: &A,
    x: &[A::E],
    y: &[A::E],
    n: usize,
    k: usize,
    m: usize,
) -> Vec<A::E> {
    let mut out = vec![a.zero(); n * m];
    for i in 0..n {
        for l in 0..k {
            let xv = &x[i * k + l];
            if a.is_zero(xv) {
                continue;
            }
            for j in 0..m {
                let yv = &y[l * m + j];
                if a.is_zero(yv) {
                    continue;
                }
                let t = a.mul(xv, yv);
                out[i * m + j] = a.add(&out[i * m + j], &t);
            }
        }
    }
    out
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let data = match field {
            FieldSpec::Prime(p) => Data::Mod(p, vec![0; rows * cols]),
            FieldSpec::Rationals => Data::Rat(vec![BigRational::zero(); rows * cols]),
        };
        Matrix { rows, cols, data }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        let one = field.one();
        for i in 0..n {
            m.set(i, i, &one);
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, &f(i, j));
            }
        }
        m
    }

    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Self::from_fn(field, rows, cols, |i, j| field.from_i64(entries[i * cols + j]))
    }

    pub fn field(&self) -> FieldSpec {
        match &self.data {
            Data::Mod(p, _) => FieldSpec::Prime(*p),
            Data::Rat(_) => FieldSpec::Rationals,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let idx = i * self.cols + j;
        match &self.data {
            Data::Mod(_, v) => Scalar::Mod(v[idx]),
            Data::Rat(v) => Scalar::Rat(Box::new(v[idx].clone())),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: &Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let idx = i * self.cols + j;
        match (&mut self.data, value) {
            (Data::Mod(_, v), Scalar::Mod(x)) => v[idx] = *x,
            (Data::Rat(v), Scalar::Rat(x)) => v[idx] = (**x).clone(),
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Data::Mod(_, v) => v.iter().all(|x| *x == 0),
            Data::Rat(v) => v.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.field(), self.rows)
    }

    pub fn transpose(&self) -> Self {
        let (r, c) = (self.rows, self.cols);
        let data = match &self.data {
            Data::Mod(p, v) => Data::Mod(*p, (0..r * c).map(|k| v[(k % r) * c + k / r]).collect()),
            Data::Rat(v) => Data::Rat((0..r * c).map(|k| v[(k % r) * c + k / r].clone()).collect()),
        };
        Matrix {
            rows: c,
            cols: r,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let data = match (&self.data, &other.data) {
            (Data::Mod(p, x), Data::Mod(q, y)) => {
                assert_eq!(p, q, "field mismatch");
                Data::Mod(*p, matmul_generic(&ModP(*p), x, y, n, k, m))
            }
            (Data::Rat(x), Data::Rat(y)) => Data::Rat(matmul_generic(&Rat, x, y, n, k, m)),
            _ => panic!("field mismatch"),
        };
        Matrix {
            rows: n,
            cols: m,
            data,
        }
    }

    fn zip_with(&self, other: &Matrix, sub: bool) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape");
        let data = match (&self.data, &other.data) {
            (Data::Mod(p, x), Data::Mod(_, y)) => {
                let a = ModP(*p);
                Data::Mod(
                    *p,
                    x.iter()
                        .zip(y)
                        .map(|(u, v)| if sub { a.sub(u, v) } else { a.add(u, v) })
                        .collect(),
                )
            }
            (Data::Rat(x), Data::Rat(y)) => Data::Rat(
                x.iter()
                    .zip(y)
                    .map(|(u, v)| if sub { u - v } else { u + v })
                    .collect(),
            ),
            _ => panic!("field mismatch"),
        };
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, false)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, true)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = match (&self.data, s) {
            (Data::Mod(p, x), Scalar::Mod(c)) => {
                Data::Mod(*p, x.iter().map(|u| mul_mod(*u, *c, *p)).collect())
            }
            (Data::Rat(x), Scalar::Rat(c)) => Data::Rat(x.iter().map(|u| u * &**c).collect()),
            _ => panic!("field mismatch"),
        };
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn trace(&self) -> Scalar {
        let f = self.field();
        let mut t = f.zero();
        for i in 0..self.rows.min(self.cols) {
            t = f.add(&t, &self.get(i, i));
        }
        t
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field(), self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: FieldSpec, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column count");
            out.paste(r0, 0, m);
            r0 += m.rows;
        }
        out
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(field: FieldSpec, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row count");
            out.paste(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    pub fn block_diag(field: FieldSpec, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.paste(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        match (&mut self.data, &block.data) {
            (Data::Mod(_, dst), Data::Mod(_, src)) => {
                for i in 0..block.rows {
                    let d = (r0 + i) * self.cols + c0;
                    dst[d..d + block.cols]
                        .copy_from_slice(&src[i * block.cols..(i + 1) * block.cols]);
                }
            }
            (Data::Rat(dst), Data::Rat(src)) => {
                for i in 0..block.rows {
                    for j in 0..block.cols {
                        dst[(r0 + i) * self.cols + c0 + j] = src[i * block.cols + j].clone();
                    }
                }
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        Matrix::from_fn(self.field(), rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field(), idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field(), self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn row(&self, i: usize) -> Matrix {
        self.submatrix(i, 0, 1, self.cols)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut out = self.clone();
        let pivots = match &mut out.data {
            Data::Mod(p, v) => rref_generic(&ModP(*p), v, self.rows, self.cols),
            Data::Rat(v) => rref_generic(&Rat, v, self.rows, self.cols),
        };
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().1.len()
    }

    /// Columns form a basis of `{v : self · v = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field();
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, &f.one());
            for (i, &pc) in pivots.iter().enumerate() {
                let v = r.get(i, fc);
                if !v.is_zero() {
                    k.set(pc, j, &f.neg(&v));
                }
            }
        }
        k
    }

    /// Rows form a basis of `{v : v · self = 0}`.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Canonical basis of the row space (nonzero rows of the RREF).
    pub fn row_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        r.submatrix(0, 0, pivots.len(), self.cols)
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} rows, matrix has {}",
                b.rows, self.rows
            )));
        }
        let f = self.field();
        let aug = Matrix::hstack(f, self.rows, &[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(f, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, &r.get(i, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    /// Some `x` with `x · self = b`.
    pub fn solve_left(&self, b: &Matrix) -> Result<Option<Matrix>> {
        Ok(self.transpose().solve(&b.transpose())?.map(|x| x.transpose()))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let x = self.solve(&Matrix::identity(self.field(), n)).ok()??;
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Fitting decomposition of a square matrix acting on column vectors:
    /// bases (as columns) of `ker f^n` and `im f^n`.
    pub fn fitting_split(&self) -> (Matrix, Matrix) {
        assert!(self.is_square(), "fitting_split needs a square matrix");
        let n = self.rows;
        let fpow = self.pow(n as u64);
        let kernel = fpow.kernel_basis();
        let image = fpow.transpose().row_basis().transpose();
        (kernel, image)
    }

    /// Standard basis rows completing the row space of `self` to all of `k^cols`.
    pub fn complement_rows(&self) -> Matrix {
        let f = self.field();
        let (_, pivots) = self.rref();
        let idx: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        Matrix::from_fn(f, idx.len(), self.cols, |i, j| {
            if j == idx[i] {
                f.one()
            } else {
                f.zero()
            }
        })
    }

    /// Basis rows of the intersection of the row spaces of `self` and `other`.
    pub fn row_intersection(&self, other: &Matrix) -> Matrix {
        let f = self.field();
        let a = self.row_basis();
        let b = other.row_basis();
        if a.rows == 0 || b.rows == 0 {
            return Matrix::zeros(f, 0, self.cols);
        }
        let stacked = Matrix::vstack(f, self.cols, &[&a, &b]);
        let rel = stacked.left_kernel_basis();
        let coeffs = rel.submatrix(0, 0, rel.rows, a.rows);
        coeffs.mul(&a).row_basis()
    }

    /// Entries in printable form, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        let f = self.field();
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| f.format(&self.get(i, j))).collect())
            .collect()
    }

    pub fn from_strings(field: FieldSpec, rows: usize, cols: usize, s: &[Vec<String>]) -> Result<Self> {
        if s.len() != rows || s.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "expected a {rows}x{cols} matrix"
            )));
        }
        let mut m = Matrix::zeros(field, rows, cols);
        for (i, row) in s.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                m.set(i, j, &field.parse_scalar(e)?);
            }
        }
        Ok(m)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_strings() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;
    const GF5: FieldSpec = FieldSpec::Prime(5);

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(Q, 0, 0).rank(), 0);
        assert_eq!(Matrix::identity(Q, 4).rank(), 4);
        assert_eq!(Matrix::from_i64(Q, 2, 2, &[1, 2, 2, 4]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 3).kernel_basis().cols(), 0);
        let z = Matrix::zeros(Q, 2, 2).kernel_basis();
        assert_eq!(z.cols(), 2);
        assert_eq!(z.rank(), 2);
        let k = Matrix::from_i64(Q, 1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k.cols(), 1);
        let a = k.get(0, 0);
        let b = k.get(1, 0);
        assert_eq!(Q.add(&a, &b), Q.zero());
        assert!(!a.is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64(Q, 2, 1, &[3, -7]);
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap().unwrap(), b);
        assert!(Matrix::zeros(Q, 2, 2).solve(&b).unwrap().is_none());
        let two = Matrix::from_i64(GF5, 1, 1, &[2]);
        let x = two.solve(&Matrix::from_i64(GF5, 1, 1, &[3])).unwrap().unwrap();
        assert_eq!(x.get(0, 0), Scalar::Mod(4));
        assert!(two.solve(&Matrix::zeros(GF5, 2, 1)).is_err());
    }

    #[test]
    fn fitting_examples() {
        let (k, i) = Matrix::identity(Q, 3).fitting_split();
        assert_eq!((k.cols(), i.cols()), (0, 3));
        let (k, i) = Matrix::zeros(Q, 3, 3).fitting_split();
        assert_eq!((k.cols(), i.cols()), (3, 0));
        // J2 (+) I1
        let f = Matrix::from_i64(Q, 3, 3, &[0, 1, 0, 0, 0, 0, 0, 0, 1]);
        let (k, i) = f.fitting_split();
        assert_eq!((k.cols(), i.cols()), (2, 1));
    }

    #[test]
    fn intersection_and_complement() {
        let a = Matrix::from_i64(Q, 2, 3, &[1, 0, 0, 0, 1, 0]);
        let b = Matrix::from_i64(Q, 2, 3, &[1, 1, 0, 0, 0, 1]);
        let i = a.row_intersection(&b);
        assert_eq!(i.rows(), 1);
        assert_eq!(a.complement_rows().rows(), 1);
    }
}
