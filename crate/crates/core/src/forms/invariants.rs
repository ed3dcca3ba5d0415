//! Hasse-Minkowski invariants of symmetric forms over the rationals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::gram::{GramForm, Symmetry};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A place of the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Prime(u64),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Rank, signature, squarefree discriminant and Hasse symbols
/// `prod_{i<j} (d_i, d_j)_v` of a diagonalisation.
#[derive(Clone, Debug, Serialize)]
pub struct GWQInvariants {
    pub rank: usize,
    pub signature: i64,
    pub disc: BigInt,
    pub hasse: BTreeMap<Place, i8>,
}

impl GWQInvariants {
    /// Hasse symbol at `v`; `+1` at unlisted places.
    pub fn hasse_at(&self, v: Place) -> i8 {
        self.hasse.get(&v).copied().unwrap_or(1)
    }

    /// Product of the Hasse symbols over all listed places.
    pub fn hilbert_product(&self) -> i8 {
        self.hasse.values().product()
    }

    /// Equality of the full invariant tuple, hence of the classes in `GW(Q)`.
    pub fn same_class(&self, other: &Self) -> bool {
        let places: BTreeSet<Place> = self.hasse.keys().chain(other.hasse.keys()).copied().collect();
        self.rank == other.rank
            && self.signature == other.signature
            && self.disc == other.disc
            && places.iter().all(|&v| self.hasse_at(v) == other.hasse_at(v))
    }
}

impl PartialEq for GWQInvariants {
    fn eq(&self, other: &Self) -> bool {
        self.same_class(other)
    }
}

/// Squarefree part of a nonzero integer (sign kept).
pub fn squarefree(n: &BigInt) -> BigInt {
    let mut out = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            out *= BigInt::from(p);
        }
    }
    out
}

/// Prime factorisation of `|n|` by trial division.
pub fn factor(n: &BigInt) -> Vec<(u64, u32)> {
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while BigInt::from(p) * BigInt::from(p) <= m {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        out.push((m.to_u64().expect("cofactor fits after trial division"), 1));
    }
    out
}

/// Squarefree integer in the square class of a nonzero rational.
pub fn square_class(x: &BigRational) -> BigInt {
    squarefree(&(x.numer() * x.denom()))
}

fn split_p(a: &BigInt, p: u64) -> (u32, BigInt) {
    let bp = BigInt::from(p);
    let mut a = a.clone();
    let mut e = 0;
    while (&a % &bp).is_zero() {
        a /= &bp;
        e += 1;
    }
    (e, a)
}

fn legendre(u: &BigInt, p: u64) -> i8 {
    let bp = BigInt::from(p);
    let r = u.mod_floor(&bp).modpow(&BigInt::from((p - 1) / 2), &bp);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Hilbert symbol `(a, b)_v` for nonzero integers.
pub fn hilbert_symbol(a: &BigInt, b: &BigInt, v: Place) -> i8 {
    match v {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = split_p(a, 2);
            let (beta, w) = split_p(b, 2);
            let eps = |x: &BigInt| -> u32 { ((x - 1i32) / 2i32).mod_floor(&BigInt::from(2)).to_u32().expect("bit") };
            let omega =
                |x: &BigInt| -> u32 { ((x * x - 1i32) / 8i32).mod_floor(&BigInt::from(2)).to_u32().expect("bit") };
            let e = eps(&u) * eps(&w) + alpha * omega(&w) + beta * omega(&u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = split_p(a, p);
            let (beta, w) = split_p(b, p);
            let mut s: i8 = if (alpha * beta) % 2 == 1 && (p - 1) / 2 % 2 == 1 { -1 } else { 1 };
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&w, p);
            }
            s
        }
    }
}

/// Diagonalise a symmetric matrix by congruence; returns the diagonal.
pub fn diagonalize(m: &Matrix<BigRational>) -> Result<Vec<BigRational>> {
    let n = m.rows();
    let mut a = m.clone();
    let mut out = Vec::with_capacity(n);
    let mut k = 0;
    while k < n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                a.swap_rows(k, j);
                a.swap_cols(k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // e_k <- e_k + e_j gives a nonzero diagonal entry 2 a_kj
                for c in 0..n {
                    let v = a[(k, c)].clone() + a[(j, c)].clone();
                    a[(k, c)] = v;
                }
                for r in 0..n {
                    let v = a[(r, k)].clone() + a[(r, j)].clone();
                    a[(r, k)] = v;
                }
            } else {
                return Err(Error::Degenerate);
            }
        }
        let piv = a[(k, k)].clone();
        for r in k + 1..n {
            if a[(r, k)].is_zero() {
                continue;
            }
            let f = a[(r, k)].clone() / piv.clone();
            for c in k..n {
                let v = a[(r, c)].clone() - f.clone() * a[(k, c)].clone();
                a[(r, c)] = v;
            }
            for rr in k..n {
                let v = a[(rr, r)].clone() - f.clone() * a[(rr, k)].clone();
                a[(rr, r)] = v;
            }
        }
        out.push(piv);
        k += 1;
    }
    Ok(out)
}

/// Invariants of a diagonal form `<d_1, ..., d_n>` given by squarefree integers.
pub fn invariants_of_diagonal(d: &[BigInt]) -> GWQInvariants {
    let mut places: BTreeSet<Place> = [Place::Real, Place::Prime(2)].into_iter().collect();
    for x in d {
        for (p, _) in factor(x) {
            places.insert(Place::Prime(p));
        }
    }
    let mut hasse = BTreeMap::new();
    for &v in &places {
        let mut s: i8 = 1;
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                s *= hilbert_symbol(&d[i], &d[j], v);
            }
        }
        hasse.insert(v, s);
    }
    let pos = d.iter().filter(|x| x.is_positive()).count() as i64;
    let disc = squarefree(&d.iter().fold(BigInt::one(), |a, x| a * x));
    GWQInvariants { rank: d.len(), signature: 2 * pos - d.len() as i64, disc, hasse }
}

/// Invariants of a nondegenerate symmetric form.
pub fn invariants(f: &GramForm<BigRational>) -> Result<GWQInvariants> {
    if f.sym() != Symmetry::Symmetric {
        return Err(Error::Type("invariants need a symmetric form".into()));
    }
    let d = diagonalize(f.matrix())?;
    if d.iter().any(|x| x.is_zero()) {
        return Err(Error::Degenerate);
    }
    Ok(invariants_of_diagonal(&d.iter().map(square_class).collect::<Vec<_>>()))
}

/// Outcome of [`gw_identity_check`].
#[derive(Clone, Debug)]
pub struct GwComparison {
    pub equal: bool,
    pub lhs: Option<GWQInvariants>,
    pub rhs: Option<GWQInvariants>,
    pub diagnostic: String,
}

fn orthogonal_sum(
    pos: &[(i64, &GramForm<BigRational>)],
) -> Result<Option<GramForm<BigRational>>> {
    let mut acc: Option<GramForm<BigRational>> = None;
    for (c, f) in pos {
        let m = f.multiple(*c as usize)?;
        acc = Some(match acc {
            None => m,
            Some(a) => a.direct_sum(&m)?,
        });
    }
    Ok(acc)
}

/// Decide `sum c_i [f_i] = sum d_j [g_j]` in `GW(Q)`; negative coefficients
/// move to the other side.
pub fn gw_identity_check(
    lhs: &[(i64, GramForm<BigRational>)],
    rhs: &[(i64, GramForm<BigRational>)],
) -> Result<GwComparison> {
    let mut l: Vec<(i64, &GramForm<BigRational>)> = Vec::new();
    let mut r: Vec<(i64, &GramForm<BigRational>)> = Vec::new();
    for (c, f) in lhs {
        match c.signum() {
            1 => l.push((*c, f)),
            -1 => r.push((-c, f)),
            _ => {}
        }
    }
    for (c, f) in rhs {
        match c.signum() {
            1 => r.push((*c, f)),
            -1 => l.push((-c, f)),
            _ => {}
        }
    }
    let rank = |v: &[(i64, &GramForm<BigRational>)]| v.iter().map(|(c, f)| *c as usize * f.rank()).sum::<usize>();
    let (rl, rr) = (rank(&l), rank(&r));
    if rl != rr {
        return Ok(GwComparison { equal: false, lhs: None, rhs: None, diagnostic: format!("rank {rl} != {rr}") });
    }
    let inv = |v: &[(i64, &GramForm<BigRational>)]| -> Result<Option<GWQInvariants>> {
        orthogonal_sum(v)?.map(|f| invariants(&f)).transpose()
    };
    let (il, ir) = (inv(&l)?, inv(&r)?);
    let equal = match (&il, &ir) {
        (Some(a), Some(b)) => a.same_class(b),
        (None, None) => true,
        _ => false,
    };
    let diagnostic = match (&il, &ir) {
        (Some(a), Some(b)) => format!(
            "rank {} sig {}/{} disc {}/{}",
            a.rank, a.signature, b.signature, a.disc, b.disc
        ),
        _ => "empty".into(),
    };
    Ok(GwComparison { equal, lhs: il, rhs: ir, diagnostic })
}
