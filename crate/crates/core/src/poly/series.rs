//! Truncated power series `c_0 + c_1 t + ... + c_N t^N` over an exact ring.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// The minimal ring interface needed by series arithmetic and evaluation.
///
/// Elements carry their own ring context, so constants are produced from an
/// existing element (`zero_like`, `one_like`).
pub trait RingElem: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn from_int_like(&self, n: &BigInt) -> Self;

    fn is_one_elem(&self) -> bool {
        self.ring_sub(&self.one_like()).is_zero_elem()
    }

    fn ring_pow(&self, e: u32) -> Self {
        let mut r = self.one_like();
        for _ in 0..e {
            r = r.ring_mul(self);
        }
        r
    }

    fn scale_int(&self, n: i64) -> Self {
        self.ring_mul(&self.from_int_like(&BigInt::from(n)))
    }
}

/// Series modulo `t^{order+1}`; `coeffs` always has length `order + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: RingElem> TruncSeries<R> {
    /// Build from leading coefficients; missing ones are zero, extra ones dropped.
    /// `proto` supplies the ring when `coeffs` is empty.
    pub fn new(proto: &R, mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(proto.zero_like());
        }
        TruncSeries { order, coeffs }
    }

    pub fn one(proto: &R, order: usize) -> Self {
        Self::new(proto, vec![proto.one_like()], order)
    }

    /// `1 + x t`.
    pub fn linear(x: &R, order: usize) -> Self {
        Self::new(x, vec![x.one_like(), x.clone()], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&R> {
        self.coeffs
            .get(n)
            .ok_or(Error::Order { order: self.order, needed: n })
    }

    /// Largest index with a nonzero coefficient (0 for constants).
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero_elem())
            .unwrap_or(0)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(&self.coeffs[0], self.coeffs.clone(), order)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let zero = self.coeffs[0].zero_like();
        let da = self.degree().min(order);
        let db = rhs.degree().min(order);
        let mut out = vec![zero; order + 1];
        for i in 0..=da {
            if self.coeffs[i].is_zero_elem() {
                continue;
            }
            for j in 0..=db.min(order - i) {
                if rhs.coeffs[j].is_zero_elem() {
                    continue;
                }
                out[i + j] = out[i + j].ring_add(&self.coeffs[i].ring_mul(&rhs.coeffs[j]));
            }
        }
        TruncSeries { order, coeffs: out }
    }

    /// Multiplicative inverse; the constant coefficient must be exactly one.
    pub fn inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_one_elem() {
            return Err(Error::Invertibility);
        }
        let n = self.order;
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(self.coeffs[0].one_like());
        let d = self.degree();
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k.min(d) {
                if self.coeffs[j].is_zero_elem() {
                    continue;
                }
                acc = acc.ring_add(&self.coeffs[j].ring_mul(&g[k - j]));
            }
            g.push(acc.ring_neg());
        }
        Ok(TruncSeries { order: n, coeffs: g })
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut result = Self::one(&self.coeffs[0], self.order);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(result)
    }

    pub fn map<S: RingElem>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// `sum c_k t^k  ->  sum c_k s^k t^k` with `s^k` supplied per index.
    pub fn twist(&self, f: impl Fn(usize, &R) -> R) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| f(k, c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Ctx, ZPoly};

    #[test]
    fn geometric_inverse() {
        let c = Ctx::polynomial(&["x"]).unwrap();
        let x = ZPoly::var(&c, "x").unwrap();
        let f = TruncSeries::linear(&x, 2);
        let g = f.inverse().unwrap();
        assert_eq!(g.coeffs()[1], -&x);
        assert_eq!(g.coeffs()[2], x.pow(2));
        let id = f.mul(&g);
        assert!(id.coeffs()[0].is_one());
        assert!(id.coeffs()[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn product_of_linear_factors() {
        let c = Ctx::polynomial(&["x", "y"]).unwrap();
        let x = ZPoly::var(&c, "x").unwrap();
        let y = ZPoly::var(&c, "y").unwrap();
        let p = TruncSeries::linear(&x, 2).mul(&TruncSeries::linear(&y, 2));
        assert_eq!(p.coeffs()[1], &x + &y);
        assert_eq!(p.coeffs()[2], &x * &y);
    }

    #[test]
    fn non_unit_constant_rejected() {
        let c = Ctx::polynomial(&["x"]).unwrap();
        let x = ZPoly::var(&c, "x").unwrap();
        let f = TruncSeries::new(&x, vec![ZPoly::from_i64(&c, 2), x.clone()], 3);
        assert_eq!(f.inverse().unwrap_err(), Error::Invertibility);
        assert!(matches!(f.coeff(4), Err(Error::Order { order: 3, needed: 4 })));
    }

    #[test]
    fn negative_power() {
        let c = Ctx::polynomial(&["x"]).unwrap();
        let x = ZPoly::var(&c, "x").unwrap();
        let f = TruncSeries::linear(&x, 4);
        let a = f.pow(-2).unwrap();
        let b = f.pow(2).unwrap();
        let id = a.mul(&b);
        assert!(id.coeffs()[0].is_one());
        assert!(id.coeffs()[1..].iter().all(|c| c.is_zero()));
    }
}
