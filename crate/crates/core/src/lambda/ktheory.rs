//! The forgetful image in K-theory, `Z[beta^{±1}][u_1, ..., u_k]`, with its own
//! lambda structure: `lambda_t(u_i) = 1 + u_i t + beta^4 t^2` and
//! `lambda^n(beta^j y) = beta^{jn} lambda^n(y)`.

use std::sync::Arc;

use num_traits::ToPrimitive;

use super::newton;
use crate::error::{Error, Result};
use crate::gw::GWElem;
use crate::poly::{Ctx, Monomial, TruncSeries, VarId, ZPoly};
use crate::symfunc::universal_p_bounded;
use crate::symring::SymClass;

/// Context `u1..uk, beta` for K-theory images.
#[derive(Clone, Debug)]
pub struct KRing {
    pub ctx: Arc<Ctx>,
    pub k: usize,
}

impl KRing {
    pub fn new(k: usize, prefix: &str) -> KRing {
        let mut vars: Vec<VarId> = (1..=k).map(|i| VarId::poly(format!("{prefix}{i}"))).collect();
        vars.push(VarId::laurent("beta"));
        KRing { ctx: Ctx::new(vars).expect("distinct names"), k }
    }

    pub fn beta_pow(&self, j: i32) -> ZPoly {
        let mut e = vec![0; self.k + 1];
        e[self.k] = j;
        ZPoly::term(&self.ctx, e, 1.into()).expect("beta is Laurent")
    }

    fn generator(&self, i: usize) -> ZPoly {
        ZPoly::var_at(&self.ctx, i)
    }
}

/// `eps -> -1`, `tau -> 2 beta^2`, `gamma -> beta^4`.
pub fn forgetful_class(x: &SymClass, kr: &KRing) -> ZPoly {
    let eps = ZPoly::from_i64(&kr.ctx, -1);
    let tau = kr.beta_pow(2).scale(&2.into());
    let (g, gi) = (kr.beta_pow(4), kr.beta_pow(-4));
    let gens: Vec<ZPoly> = (0..kr.k).map(|i| kr.generator(i)).collect();
    x.eval_into(&gens, &ZPoly::one(&kr.ctx), |c: &GWElem| c.eval(&eps, &tau, &g, &gi))
}

/// `lambda_t` in the K-theory image.
pub fn k_lambda_t(x: &ZPoly, kr: &KRing, order: usize) -> Result<TruncSeries<ZPoly>> {
    let one = ZPoly::one(&kr.ctx);
    let mut acc = TruncSeries::one(&one, order);
    for (m, c) in x.terms() {
        let beta = m.exp(kr.k);
        let mut s = TruncSeries::new(&one, vec![one.clone(), one.clone()], order);
        let mut dim = 1usize;
        let b4 = kr.beta_pow(4);
        for (i, &e) in m.exps()[..kr.k].iter().enumerate() {
            for _ in 0..e {
                let y = kr.generator(i);
                if dim == 1 {
                    s = TruncSeries::new(&one, vec![one.clone(), y, b4.clone()], order);
                    dim = 2;
                    continue;
                }
                let mut coeffs = vec![one.clone()];
                for n in 1..=order {
                    let (a, b) = (n.min(dim), n.min(2));
                    if n > a * b {
                        coeffs.push(ZPoly::zero(&kr.ctx));
                        continue;
                    }
                    let mut vals: Vec<ZPoly> = s.coeffs()[1..=a].to_vec();
                    vals.push(y.clone());
                    if b == 2 {
                        vals.push(b4.clone());
                    }
                    coeffs.push(universal_p_bounded(n, a, b).eval_ring(&vals, &one)?);
                }
                s = TruncSeries::new(&one, coeffs, order);
                dim = dim.saturating_mul(2).min(order.max(1));
            }
        }
        if beta != 0 {
            s = s.twist(|k, v| {
                let sh = Monomial::from_exps({
                    let mut e = vec![0; kr.k + 1];
                    e[kr.k] = beta * k as i32;
                    e
                });
                v.shift(&sh).expect("beta is Laurent")
            });
        }
        let mult = c.to_i64().ok_or_else(|| Error::Index("multiplicity too large".into()))?;
        acc = acc.mul(&s.pow(mult)?);
    }
    Ok(acc)
}

/// `psi^n` (`n >= 1`) in the K-theory image.
pub fn k_adams(n: usize, x: &ZPoly, kr: &KRing) -> Result<ZPoly> {
    let s = k_lambda_t(x, kr, n)?;
    Ok(newton(&s, n)?.pop().expect("n >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::adams;
    use crate::symring::SymRing;

    #[test]
    fn forgetful_of_tau() {
        let kr = KRing::new(0, "u");
        let r = SymRing::base();
        let t = forgetful_class(&SymClass::constant(&r, GWElem::tau()), &kr);
        assert_eq!(t.to_text(), "2*beta^2");
        let p2 = k_adams(2, &t, &kr).unwrap();
        assert_eq!(p2.to_text(), "2*beta^4");
    }

    #[test]
    fn intertwines_psi() {
        let r = SymRing::new(2, "u");
        let kr = KRing::new(2, "u");
        let x = SymClass::generator(&r, 0).unwrap().mul(&SymClass::generator(&r, 1).unwrap());
        for n in 1..=4 {
            let lhs = forgetful_class(&adams(n, &x).unwrap(), &kr);
            let rhs = k_adams(n as usize, &forgetful_class(&x, &kr), &kr).unwrap();
            assert_eq!(lhs, rhs, "n={n}");
        }
    }
}
