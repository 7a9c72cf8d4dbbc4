use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("row {bad} has length {}, expected {cols}", rows[bad].len())));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Rows and columns restricted to the same index set, in the given order.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("principal submatrix of a non-square matrix".into()));
        }
        let mut seen = vec![false; self.rows];
        for &i in indices {
            if i >= self.rows || std::mem::replace(&mut seen[i], true) {
                return Err(Error::BadIndex { index: i, n: self.rows });
            }
        }
        Ok(Matrix::from_fn(indices.len(), indices.len(), |a, b| {
            self.get(indices[a], indices[b]).clone()
        }))
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::ShapeMismatch("incompatible 2x2 block shapes".into()));
        }
        let (top, left) = (a.rows, a.cols);
        Ok(Matrix::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < top, j < left) {
                (true, true) => a.get(i, j).clone(),
                (true, false) => b.get(i, j - left).clone(),
                (false, true) => c.get(i - top, j).clone(),
                (false, false) => d.get(i - top, j - left).clone(),
            }
        }))
    }
}

impl<T: Clone + Mul<Output = T>> Matrix<T> {
    /// Kronecker product: the block matrix `[a_ij * other]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * p, self.cols * q, |i, j| {
            self.get(i / p, j / q).clone() * other.get(i % p, j % q).clone()
        })
    }
}

impl<T: Clone + Add<Output = T>> Matrix<T> {
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }
}

impl<T: Clone + Sub<Output = T>> Matrix<T> {
    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }
}

impl<T: Clone> Matrix<T> {
    fn zip(&self, other: &Self, f: impl Fn(T, T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a.clone(), b.clone())).collect(),
        })
    }
}

impl Matrix<f64> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// All-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![1.0; rows * cols] }
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|x| k * x)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Fails unless square and symmetric to within `tol * max(1, ‖M‖_F)`.
    pub fn check_symmetric(&self, tol: f64) -> Result<()> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let bound = tol * self.frobenius_norm().max(1.0);
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if (self.get(i, j) - self.get(j, i)).abs() > bound {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.rows).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

impl Matrix<i64> {
    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(|&x| x as f64)
    }
}

/// Square symmetric matrix with big-integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIntMatrix(Matrix<BigInt>);

impl SymmetricIntMatrix {
    pub fn new(m: Matrix<BigInt>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::ShapeMismatch(format!("{}x{} is not square", m.rows, m.cols)));
        }
        for i in 0..m.rows {
            for j in i + 1..m.rows {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymmetricIntMatrix(m))
    }

    pub fn from_i64(m: &Matrix<i64>) -> Result<Self> {
        Self::new(m.map(|&x| BigInt::from(x)))
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::from_i64(&Matrix::from_rows(rows)?)
    }

    pub fn zeros(n: usize) -> Self {
        SymmetricIntMatrix(Matrix::from_fn(n, n, |_, _| BigInt::zero()))
    }

    pub fn n(&self) -> usize {
        self.0.rows
    }

    pub fn matrix(&self) -> &Matrix<BigInt> {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        self.0.get(i, j)
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        self.0.map(|x| x.to_f64().unwrap_or(f64::NAN))
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        Ok(SymmetricIntMatrix(self.0.principal_submatrix(indices)?))
    }

    pub fn kron(&self, other: &Self) -> Self {
        SymmetricIntMatrix(self.0.kron(&other.0))
    }

    /// Block-diagonal `[[self, 0], [0, other]]`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let z = |r, c| Matrix::from_fn(r, c, |_, _| BigInt::zero());
        let m = Matrix::block2(&self.0, &z(self.n(), other.n()), &z(other.n(), self.n()), &other.0)
            .expect("block shapes agree");
        SymmetricIntMatrix(m)
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        SymmetricIntMatrix(self.0.map(|x| x * &k))
    }

    pub fn charpoly(&self) -> super::Charpoly {
        super::charpoly_exact(self)
    }

    pub fn inertia(&self) -> super::Inertia {
        super::inertia_exact(self)
    }

    pub fn determinant(&self) -> BigInt {
        self.charpoly().determinant()
    }

    pub fn rank(&self) -> usize {
        let inertia = self.inertia();
        inertia.n_plus + inertia.n_minus
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn kron_with_identity_is_block_diagonal() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let i2 = m(vec![vec![1, 0], vec![0, 1]]);
        let k = i2.kron(&a);
        assert_eq!(
            k.to_rows(),
            vec![vec![1, 2, 0, 0], vec![3, 4, 0, 0], vec![0, 0, 1, 2], vec![0, 0, 3, 4]]
        );
    }

    #[test]
    fn kron_shape_and_entries() {
        let a = m(vec![vec![1, 2, 3]]);
        let b = m(vec![vec![1], vec![10]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 3));
        assert_eq!(k.to_rows(), vec![vec![1, 2, 3], vec![10, 20, 30]]);
    }

    #[test]
    fn principal_submatrix_cases() {
        let a = m(vec![vec![1, 2, 3], vec![2, 5, 6], vec![3, 6, 9]]);
        assert_eq!(a.principal_submatrix(&[0, 1, 2]).unwrap(), a);
        assert_eq!(a.principal_submatrix(&[1]).unwrap().to_rows(), vec![vec![5]]);
        assert_eq!(a.principal_submatrix(&[2, 0]).unwrap().to_rows(), vec![vec![9, 3], vec![3, 1]]);
        assert_eq!(a.principal_submatrix(&[0, 3]), Err(Error::BadIndex { index: 3, n: 3 }));
        assert_eq!(a.principal_submatrix(&[1, 1]), Err(Error::BadIndex { index: 1, n: 3 }));
    }

    #[test]
    fn symmetric_int_matrix_validation() {
        assert!(SymmetricIntMatrix::from_rows(vec![vec![0, 1], vec![2, 0]]).is_err());
        assert!(SymmetricIntMatrix::from_rows(vec![vec![0, 1, 0], vec![1, 0, 0]]).is_err());
        let s = SymmetricIntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(s.block_diag(&s).n(), 4);
    }

    #[test]
    fn symmetry_check_on_floats() {
        let a = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0 + 1e-14, 1.0]]).unwrap();
        assert!(a.check_symmetric(1e-12).is_ok());
        let b = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.1, 1.0]]).unwrap();
        assert_eq!(b.check_symmetric(1e-12), Err(Error::NotSymmetric { row: 0, col: 1 }));
    }
}
