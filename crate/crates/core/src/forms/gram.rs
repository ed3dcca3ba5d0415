//! Bilinear forms given by Gram matrices and their tensor operations.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::matrix::{int, Matrix, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Skew,
}

impl Symmetry {
    pub fn sign(self) -> i64 {
        match self {
            Symmetry::Symmetric => 1,
            Symmetry::Skew => -1,
        }
    }

    pub fn from_sign(s: i64) -> Self {
        if s >= 0 {
            Symmetry::Symmetric
        } else {
            Symmetry::Skew
        }
    }

    pub fn times(self, other: Symmetry) -> Symmetry {
        Symmetry::from_sign(self.sign() * other.sign())
    }

    pub fn pow(self, n: usize) -> Symmetry {
        if n % 2 == 0 {
            Symmetry::Symmetric
        } else {
            self
        }
    }
}

/// A `sym`-symmetric bilinear form: `G^T = sign(sym) * G`.
#[derive(Clone, PartialEq)]
pub struct GramForm<T> {
    matrix: Matrix<T>,
    sym: Symmetry,
}

/// Sorted `n`-subsets of `0..d` in lexicographic order.
pub fn subsets(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            go(i + 1, d, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n <= d {
        go(0, d, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Non-decreasing `n`-tuples from `0..d` in lexicographic order.
pub fn multisets(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            go(i, d, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, n, &mut Vec::new(), &mut out);
    out
}

impl<T: Scalar> GramForm<T> {
    pub fn new(matrix: Matrix<T>, sym: Symmetry) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Index("Gram matrix must be square".into()));
        }
        let s: T = int(sym.sign());
        let n = matrix.rows();
        for i in 0..n {
            for j in 0..n {
                if matrix[(j, i)] != s.clone() * matrix[(i, j)].clone() {
                    return Err(Error::Symmetry(format!("{sym:?}"), format!("entry ({i},{j})")));
                }
            }
        }
        Ok(GramForm { matrix, sym })
    }

    /// `<a_1, ..., a_n>`.
    pub fn diagonal(d: &[T]) -> Self {
        GramForm { matrix: Matrix::diagonal(d), sym: Symmetry::Symmetric }
    }

    pub fn diagonal_i64(d: &[i64]) -> Self {
        Self::diagonal(&d.iter().map(|&x| int(x)).collect::<Vec<T>>())
    }

    /// `H_+(E)` or `H_-(E)` for `E` trivial of rank `r`: Gram `[[0, I], [±I, 0]]`.
    pub fn hyperbolic(r: usize, sym: Symmetry) -> Self {
        let mut m = Matrix::zeros(2 * r, 2 * r);
        for i in 0..r {
            m[(i, r + i)] = T::one();
            m[(r + i, i)] = int(sym.sign());
        }
        GramForm { matrix: m, sym }
    }

    /// The symplectic plane `a * [[0, 1], [-1, 0]]`.
    pub fn symplectic_plane(a: T) -> Self {
        let mut m = Matrix::zeros(2, 2);
        m[(0, 1)] = a.clone();
        m[(1, 0)] = -a;
        GramForm { matrix: m, sym: Symmetry::Skew }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn sym(&self) -> Symmetry {
        self.sym
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn determinant(&self) -> T {
        self.matrix.determinant().expect("square")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn require_nondegenerate(&self) -> Result<()> {
        if self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::Degenerate)
        }
    }

    /// `⋀^n`: Gram entries are `det(G[I, J])` on sorted `n`-subsets.
    pub fn ext_power(&self, n: usize) -> Result<Self> {
        if n > self.rank() {
            return Err(Error::Index(format!("exterior power {n} of a rank-{} form", self.rank())));
        }
        let basis = subsets(self.rank(), n);
        let mut m = Matrix::zeros(basis.len(), basis.len());
        for (a, i) in basis.iter().enumerate() {
            for (b, j) in basis.iter().enumerate() {
                m[(a, b)] = self.matrix.select(i, j).determinant()?;
            }
        }
        Ok(GramForm { matrix: m, sym: self.sym.pow(n) })
    }

    /// `Sym^n` with the unnormalised pairing: Gram entries are permanents of
    /// `G[x, y]` on non-decreasing `n`-tuples, so `Sym^2 <a> = <2a^2>`.
    pub fn sym_power(&self, n: usize) -> Result<Self> {
        let basis = multisets(self.rank(), n);
        let mut m = Matrix::zeros(basis.len(), basis.len());
        for (a, i) in basis.iter().enumerate() {
            for (b, j) in basis.iter().enumerate() {
                m[(a, b)] = self.matrix.select(i, j).permanent()?;
            }
        }
        Ok(GramForm { matrix: m, sym: self.sym.pow(n) })
    }

    pub fn tensor(&self, other: &Self) -> Self {
        GramForm { matrix: self.matrix.kron(&other.matrix), sym: self.sym.times(other.sym) }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.sym != other.sym {
            return Err(Error::Type(format!("orthogonal sum of {:?} and {:?} forms", self.sym, other.sym)));
        }
        Ok(GramForm { matrix: self.matrix.block_diag(&other.matrix), sym: self.sym })
    }

    /// `n` copies in orthogonal sum (`n >= 1`).
    pub fn multiple(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Index("zero multiple".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.direct_sum(self)?;
        }
        Ok(acc)
    }

    /// `<a> ⊗ f`.
    pub fn scale(&self, a: &T) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(GramForm { matrix: self.matrix.scale(a), sym: self.sym })
    }

    /// The form on the dual space: Gram `(G^{-1})^T`.
    pub fn dual(&self) -> Result<Self> {
        Ok(GramForm { matrix: self.matrix.inverse()?.transpose(), sym: self.sym })
    }

    /// Pull back along `b`: Gram `b^T G b`.
    pub fn pullback(&self, b: &Matrix<T>) -> Result<Self> {
        Ok(GramForm { matrix: b.congruent(&self.matrix)?, sym: self.sym })
    }
}

/// `b^T Gram(f) b == Gram(g)` for an invertible square `b`.
pub fn check_congruence<T: Scalar>(b: &Matrix<T>, f: &GramForm<T>, g: &GramForm<T>) -> Result<bool> {
    if !b.is_square() || b.rows() != f.rank() || f.rank() != g.rank() {
        return Err(Error::Index(format!("witness {}x{} for ranks {} and {}", b.rows(), b.cols(), f.rank(), g.rank())));
    }
    if b.determinant()?.is_zero() {
        return Err(Error::Witness);
    }
    Ok(b.congruent(f.matrix())? == *g.matrix())
}

/// `b^T Gram(f) b == Gram(g)` for an injective `b` (an isometric embedding).
pub fn check_embedding<T: Scalar>(b: &Matrix<T>, f: &GramForm<T>, g: &GramForm<T>) -> Result<bool> {
    if b.rows() != f.rank() || b.cols() != g.rank() {
        return Err(Error::Index("embedding shape".into()));
    }
    let btb = b.transpose().mul(b)?;
    if btb.determinant()?.is_zero() {
        return Err(Error::Witness);
    }
    Ok(b.congruent(f.matrix())? == *g.matrix())
}

impl<T: fmt::Display> fmt::Debug for GramForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GramForm({:?}, {:?})", self.sym, self.matrix)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramJson {
    pub sym: Symmetry,
    pub matrix: Vec<Vec<String>>,
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d): (BigInt, BigInt) = (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?);
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl GramForm<BigRational> {
    pub fn to_json_value(&self) -> GramJson {
        GramJson {
            sym: self.sym,
            matrix: self.matrix.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json_value(v: &GramJson) -> Result<Self> {
        let rows = v
            .matrix
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GramForm::new(Matrix::from_rows(rows)?, v.sym)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: GramJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type QG = GramForm<BigRational>;

    fn q(x: i64) -> BigRational {
        int(x)
    }

    #[test]
    fn exterior_examples() {
        let hp = QG::hyperbolic(1, Symmetry::Symmetric);
        assert_eq!(hp.ext_power(2).unwrap(), QG::diagonal_i64(&[-1]));
        let hm = QG::hyperbolic(1, Symmetry::Skew);
        assert_eq!(hm.ext_power(2).unwrap(), QG::diagonal_i64(&[1]));
        assert_eq!(hm.ext_power(1).unwrap(), hm);
        assert_eq!(hm.ext_power(0).unwrap(), QG::diagonal_i64(&[1]));
        assert!(hm.ext_power(3).is_err());
    }

    #[test]
    fn symmetric_power_unnormalised() {
        let f = QG::diagonal_i64(&[3]);
        assert_eq!(f.sym_power(2).unwrap(), QG::diagonal_i64(&[18]));
        assert_eq!(QG::hyperbolic(2, Symmetry::Skew).sym_power(2).unwrap().sym(), Symmetry::Symmetric);
    }

    #[test]
    fn tensor_and_sums() {
        let a = QG::diagonal_i64(&[2]);
        let b = QG::diagonal_i64(&[3]);
        assert_eq!(a.tensor(&b), QG::diagonal_i64(&[6]));
        let hm = QG::hyperbolic(1, Symmetry::Skew);
        assert_eq!(hm.tensor(&hm).sym(), Symmetry::Symmetric);
        assert!(a.direct_sum(&hm).is_err());
        assert_eq!(QG::diagonal_i64(&[1]).scale(&q(2)).unwrap(), a);
        assert_eq!(QG::hyperbolic(2, Symmetry::Symmetric).rank(), 4);
        assert_eq!(hm.dual().unwrap().matrix(), &Matrix::from_i64(&[&[0, 1], &[-1, 0]]).unwrap());
    }

    #[test]
    fn rejects_asymmetric() {
        let m = Matrix::<BigRational>::from_i64(&[&[0, 1], &[0, 0]]).unwrap();
        assert!(QG::new(m, Symmetry::Symmetric).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let f = QG::new(Matrix::from_rows(vec![vec![BigRational::new(1.into(), 2.into())]]).unwrap(), Symmetry::Symmetric)
            .unwrap();
        let s = f.to_json();
        assert_eq!(s, r#"{"sym":"symmetric","matrix":[["1/2"]]}"#);
        assert_eq!(QG::from_json(&s).unwrap(), f);
        assert!(QG::from_json(r#"{"sym":"skew","matrix":[["1"]]}"#).is_err());
    }

    #[test]
    fn identity_congruence() {
        let f = QG::hyperbolic(1, Symmetry::Symmetric);
        assert!(check_congruence(&Matrix::identity(2), &f, &f).unwrap());
        let sing = Matrix::<BigRational>::zeros(2, 2);
        assert!(matches!(check_congruence(&sing, &f, &f), Err(Error::Witness)));
    }
}
