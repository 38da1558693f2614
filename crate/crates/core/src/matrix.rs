//! Dense square matrices over exact fields and their determinants.
//!
//! Two independent kernels: fraction-free (Bareiss) elimination for routine
//! use, and Laplace cofactor expansion kept as a cross-check.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scalar::{QuadExt, Rational};

/// Exact field element usable as a matrix entry.
///
/// Operations on [`QuadExt`] panic if the operands live in different
/// extensions; a matrix always holds entries of a single field.
pub trait FieldElem: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Division by a nonzero element.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl FieldElem for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl FieldElem for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::zero_in(self.radicand()).expect("valid radicand")
    }
    fn one_like(&self) -> Self {
        QuadExt::one_in(self.radicand()).expect("valid radicand")
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("entries share a radicand")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("entries share a radicand")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("entries share a radicand")
    }
    fn div(&self, rhs: &Self) -> Self {
        self.try_div(rhs)
            .expect("nonzero divisor sharing the radicand")
    }
    fn neg(&self) -> Self {
        QuadExt::neg(self)
    }
}

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: FieldElem> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::RaggedMatrix);
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Matrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    /// Submatrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<T> {
        assert_eq!(rows.len(), cols.len());
        Matrix::from_fn(rows.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Bareiss fraction-free elimination with row pivoting. Every division is
    /// exact, so over an integral domain all intermediates stay integral.
    /// `one` is returned for the empty matrix.
    pub fn det_bareiss(&self, one: &T) -> T {
        let n = self.n;
        if n == 0 {
            return one.clone();
        }
        let mut a: Vec<Vec<T>> = (0..n)
            .map(|i| self.data[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut prev = one.clone();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return one.zero_like(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num.div(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            det.neg()
        } else {
            det
        }
    }

    /// Laplace expansion along successive rows, memoised over the set of
    /// remaining columns. No division is performed.
    pub fn det_cofactor(&self, one: &T) -> T {
        let n = self.n;
        if n == 0 {
            return one.clone();
        }
        assert!(n < 64, "cofactor expansion limited to n < 64");
        let mut memo: HashMap<u64, T> = HashMap::new();
        self.cofactor_rec(0, (1u64 << n) - 1, one, &mut memo)
    }

    fn cofactor_rec(&self, row: usize, cols: u64, one: &T, memo: &mut HashMap<u64, T>) -> T {
        if row == self.n {
            return one.clone();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = one.zero_like();
        let mut sign_pos = true;
        for j in 0..self.n {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = self.get(row, j);
            if !entry.is_zero() {
                let minor = self.cofactor_rec(row + 1, cols & !(1 << j), one, memo);
                let term = entry.mul(&minor);
                acc = if sign_pos {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        acc
    }
}

/// Symmetric rational matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    inner: Matrix<Rational>,
}

impl SymMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let inner = Matrix::from_rows(rows)?;
        for i in 0..inner.n {
            for j in i + 1..inner.n {
                if inner.get(i, j) != inner.get(j, i) {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { inner })
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let inner = Matrix::from_fn(entries.len(), |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Rational::zero()
            }
        });
        SymMatrix { inner }
    }

    pub fn size(&self) -> usize {
        self.inner.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.inner.get(i, j)
    }

    pub fn as_matrix(&self) -> &Matrix<Rational> {
        &self.inner
    }

    pub fn det(&self) -> Rational {
        self.inner.det_bareiss(&Rational::one())
    }

    /// All `j×j` principal minors, indexed by increasing row/column subsets.
    pub fn principal_minors(&self, j: usize) -> Result<Vec<Rational>> {
        let n = self.size();
        if j == 0 || j > n {
            return Err(Error::MinorOutOfRange { j, n });
        }
        Ok((0..n)
            .combinations(j)
            .map(|idx| self.inner.select(&idx, &idx).det_bareiss(&Rational::one()))
            .collect())
    }
}

/// Whether every `j×j` principal minor of `m` takes the same value.
pub fn principal_minors_all_equal(m: &SymMatrix, j: usize) -> Result<bool> {
    let minors = m.principal_minors(j)?;
    Ok(minors.iter().all_equal())
}
