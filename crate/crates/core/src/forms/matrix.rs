//! Dense matrices over a field.

use std::fmt;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};

/// Field scalars usable in Gram-matrix computations.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> + FromPrimitive + Send + Sync {}

impl<T> Scalar for T where T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = T> + FromPrimitive + Send + Sync {}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(d: &[T]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Index("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Index(format!("{}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let mut m = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = m[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        Ok(m)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Index("shape mismatch".into()));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, a: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| a.clone() * x.clone()).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    /// Kronecker product; row index `(i, k)` maps to `i * rhs.rows + k`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut m = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        m[(i * rhs.rows + k, j * rhs.cols + l)] = a.clone() * rhs[(k, l)].clone();
                    }
                }
            }
        }
        m
    }

    pub fn block_diag(&self, rhs: &Self) -> Self {
        let mut m = Self::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                m[(self.rows + i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        m
    }

    /// Submatrix on the given (possibly repeated) row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Index("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a[(c, c)].clone();
            det = det * piv.clone();
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone() / piv.clone();
                for k in c..n {
                    let v = a[(r, k)].clone() - f.clone() * a[(c, k)].clone();
                    a[(r, k)] = v;
                }
            }
        }
        Ok(det)
    }

    /// Permanent (sum over all permutations without signs).
    pub fn permanent(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Index("permanent of a non-square matrix".into()));
        }
        fn go<T: Scalar>(m: &Matrix<T>, row: usize, used: &mut Vec<bool>) -> T {
            if row == m.rows {
                return T::one();
            }
            let mut acc = T::zero();
            for j in 0..m.cols {
                if used[j] || m[(row, j)].is_zero() {
                    continue;
                }
                used[j] = true;
                acc = acc + m[(row, j)].clone() * go(m, row + 1, used);
                used[j] = false;
            }
            acc
        }
        Ok(go(self, 0, &mut vec![false; self.cols]))
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Index("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero()).ok_or(Error::Degenerate)?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let piv = a[(c, c)].clone();
            for k in 0..n {
                a[(c, k)] = a[(c, k)].clone() / piv.clone();
                inv[(c, k)] = inv[(c, k)].clone() / piv.clone();
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for k in 0..n {
                    let v = a[(r, k)].clone() - f.clone() * a[(c, k)].clone();
                    a[(r, k)] = v;
                    let w = inv[(r, k)].clone() - f.clone() * inv[(c, k)].clone();
                    inv[(r, k)] = w;
                }
            }
        }
        Ok(inv)
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// `self^T * g * self`.
    pub fn congruent(&self, g: &Self) -> Result<Self> {
        self.transpose().mul(g)?.mul(self)
    }
}

pub(crate) fn int<T: Scalar>(x: i64) -> T {
    T::from_i64(x).expect("small integers are representable")
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = Matrix<BigRational>;

    #[test]
    fn det_inverse() {
        let m = Q::from_i64(&[&[2, 1], &[5, 3]]).unwrap();
        assert_eq!(m.determinant().unwrap(), int(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Q::identity(2));
        let s = Q::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(s.inverse().is_err());
        assert_eq!(s.determinant().unwrap(), int(0));
    }

    #[test]
    fn permanent_small() {
        let m = Q::from_i64(&[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(m.permanent().unwrap(), int(10));
    }

    #[test]
    fn kron_shape() {
        let a = Q::identity(2);
        let b = Q::from_i64(&[&[0, 1], &[-1, 0]]).unwrap();
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k[(2, 3)], int(1));
        assert_eq!(k[(3, 2)], int(-1));
    }

    #[test]
    fn works_over_f64() {
        let m = Matrix::<f64>::from_i64(&[&[4, 0], &[0, 2]]).unwrap();
        assert_eq!(m.determinant().unwrap(), 8.0);
    }
}
