use std::fmt::Debug;

use num::{One, Zero};
use serde_json::Value;

use super::rational::Rational;

/// Field operations needed by the dense matrix code.
///
/// Elements carry enough context to build the zero and one of their own field, which is
/// how cyclotomic elements know their conductor.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Complex conjugation.
    fn conj(&self) -> Self;
    fn rational_like(&self, q: &Rational) -> Self;
    /// The element as a rational number, if it is one.
    fn to_rational(&self) -> Option<Rational>;
    fn to_json(&self) -> Value;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn rational_like(&self, q: &Rational) -> Self {
        q.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, proto: &F) -> Self {
        Matrix { rows, cols, data: vec![proto.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, proto: &F) -> Self {
        let mut m = Matrix::zeros(n, n, proto);
        for i in 0..n {
            m.data[i * n + i] = proto.one_like();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let proto = self.proto_or(other);
        let mut out = Matrix::zeros(self.rows, other.cols, &proto);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.vanishes() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.vanishes() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul_ref(s)).collect() }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &F, other: &Matrix<F>) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.vanishes() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.vanishes() {
                *a = a.add_ref(&b.mul_ref(s));
            }
        }
    }

    pub fn kron(&self, other: &Matrix<F>) -> Matrix<F> {
        let proto = self.proto_or(other);
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols, &proto);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.vanishes() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a.mul_ref(other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn trace(&self) -> F {
        let proto = self.proto();
        (0..self.rows.min(self.cols)).fold(proto.zero_like(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::vanishes)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value().is_some_and(|s| s == s.one_like())
    }

    /// `Some(s)` when the matrix is `s` times the identity.
    pub fn scalar_value(&self) -> Option<F> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let s = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                let ok = if i == j { *v == s } else { v.vanishes() };
                if !ok {
                    return None;
                }
            }
        }
        Some(s)
    }

    pub fn pow(&self, e: u64) -> Matrix<F> {
        let mut result = Matrix::identity(self.rows, &self.proto());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(piv) = (rank..m.rows).find(|&r| !m.get(r, col).vanishes()) else {
                continue;
            };
            m.swap_rows(piv, rank);
            let inv = m.get(rank, col).inv().expect("nonzero pivot");
            for r in 0..m.rows {
                if r != rank && !m.get(r, col).vanishes() {
                    let f = m.get(r, col).mul_ref(&inv);
                    for c in col..m.cols {
                        let v = m.get(r, c).sub_ref(&f.mul_ref(m.get(rank, c)));
                        m.set(r, c, v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let n = self.rows;
        if n != self.cols || b.len() != n {
            return None;
        }
        let mut aug = Matrix::zeros(n, n + 1, &self.proto());
        for (i, bi) in b.iter().enumerate() {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, bi.clone());
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| !aug.get(r, col).vanishes())?;
            aug.swap_rows(piv, col);
            let inv = aug.get(col, col).inv()?;
            for c in col..=n {
                let v = aug.get(col, c).mul_ref(&inv);
                aug.set(col, c, v);
            }
            for r in 0..n {
                if r != col && !aug.get(r, col).vanishes() {
                    let f = aug.get(r, col).clone();
                    for c in col..=n {
                        let v = aug.get(r, c).sub_ref(&f.mul_ref(aug.get(col, c)));
                        aug.set(r, c, v);
                    }
                }
            }
        }
        Some((0..n).map(|i| aug.get(i, n).clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Row-major JSON: an array of rows of serialized entries.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array((0..self.cols).map(|j| self.get(i, j).to_json()).collect()))
                .collect(),
        )
    }

    fn proto(&self) -> F {
        self.data.first().cloned().expect("matrix with no entries has no field context")
    }

    fn proto_or(&self, other: &Matrix<F>) -> F {
        self.data.first().or_else(|| other.data.first()).cloned().expect("matrix with no entries")
    }
}
