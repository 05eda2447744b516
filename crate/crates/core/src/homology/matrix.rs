//! Integer matrices and the scalar trait shared by the elimination routines.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Ring element usable by the elimination kernels. Every arithmetic
/// operation is checked so that a machine-word pass can bail out and be
/// retried with big integers.
pub(crate) trait Entry: Clone + PartialEq + fmt::Debug {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn is_negative(&self) -> bool;
    /// `|self| < |other|`
    fn abs_lt(&self, other: &Self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn mul(&self, b: &Self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    /// Quotient rounded toward zero; `None` on overflow.
    fn div_trunc(&self, b: &Self) -> Option<Self>;
    /// `self | b`
    fn divides(&self, b: &Self) -> bool;
}

impl Entry for i64 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn mul(&self, b: &Self) -> Option<Self> {
        self.checked_mul(*b)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn div_trunc(&self, b: &Self) -> Option<Self> {
        self.checked_div(*b)
    }
    fn divides(&self, b: &Self) -> bool {
        if *self == 0 {
            *b == 0
        } else {
            b.checked_rem(*self).is_none_or(|r| r == 0)
        }
    }
}

impl Entry for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn mul(&self, b: &Self) -> Option<Self> {
        Some(self * b)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn div_trunc(&self, b: &Self) -> Option<Self> {
        Some(self / b)
    }
    fn divides(&self, b: &Self) -> bool {
        if Zero::is_zero(self) {
            Zero::is_zero(b)
        } else {
            b.is_multiple_of(self)
        }
    }
}

/// Row-major dense matrix over an [`Entry`] type.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Dense<S> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<S>,
}

impl<S: Entry> Dense<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Dense { rows, cols, data: vec![S::nil(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::unit();
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] -= q * row[src]`
    pub fn row_sub(&mut self, dst: usize, q: &S, src: usize) -> Option<()> {
        for j in 0..self.cols {
            let s = self.at(src, j);
            if s.is_nil() {
                continue;
            }
            let v = self.at(dst, j).sub_mul(q, s)?;
            self.set(dst, j, v);
        }
        Some(())
    }

    /// `col[dst] -= q * col[src]`
    pub fn col_sub(&mut self, dst: usize, q: &S, src: usize) -> Option<()> {
        for i in 0..self.rows {
            let s = self.at(i, src);
            if s.is_nil() {
                continue;
            }
            let v = self.at(i, dst).sub_mul(q, s)?;
            self.set(i, dst, v);
        }
        Some(())
    }

    pub fn negate_row(&mut self, r: usize) -> Option<()> {
        for j in 0..self.cols {
            let v = self.at(r, j).neg()?;
            self.set(r, j, v);
        }
        Some(())
    }
}

/// Dense matrix with arbitrary-precision integer entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend(r.as_ref().iter().map(|&x| BigInt::from(x)));
        }
        IntegerMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Matrix product. Panics when the inner dimensions disagree.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free elimination. Panics on non-square input.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_dense();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.at(i, k).is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.at(k, k).clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * a.at(n - 1, n - 1)
    }

    pub(crate) fn to_dense(&self) -> Dense<BigInt> {
        Dense { rows: self.rows, cols: self.cols, data: self.data.clone() }
    }

    pub(crate) fn to_dense_i64(&self) -> Option<Dense<i64>> {
        let data = self
            .data
            .iter()
            .map(|x| i64::try_from(x).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Dense { rows: self.rows, cols: self.cols, data })
    }

    pub(crate) fn from_dense(d: Dense<BigInt>) -> Self {
        IntegerMatrix { rows: d.rows, cols: d.cols, data: d.data }
    }
}

/// Row-major, space separated, one row per line.
impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Column-sparse signed incidence matrix, the internal carrier of boundary
/// maps.
#[derive(Clone, Debug, Default)]
pub(crate) struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn empty(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_integer_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn to_dense_i64(&self) -> Dense<i64> {
        let mut m = Dense::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, v);
            }
        }
        m
    }
}
