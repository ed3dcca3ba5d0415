//! Lambda series and Adams operations on [`SymClass`].
//!
//! `lambda_t` of an element is assembled from its basis expansion
//! `sum m * gamma^j eps^a tau^b u^alpha`:
//!
//! 1. `lambda_t(tau^b u^alpha)` by iterated `P_n` products of the primitives
//!    `tau`, `u_i`, each with `lambda_t = 1 + x t + gamma t^2`;
//! 2. an `eps` factor through the line element `<-1> = -eps`:
//!    `lambda_t(eps y) = (sum (-eps)^k lambda^k(y) t^k)^{-1}`;
//! 3. the twist `lambda^k(gamma^j y) = gamma^{jk} lambda^k(y)`;
//! 4. the integer multiplicity as a power in the group `1 + tR[[t]]`;
//! 5. the product over all basis terms.

mod checks;
mod hyperbolic;
mod ktheory;

pub use checks::{check_lambda_axioms, default_report, default_samples, AxiomBounds};
pub use hyperbolic::{adams_on_hyperbolic, check_adams_hyperbolic, psi_h_closed_form, psi_h_literal, psi_tau_closed_form, HyperbolicComparison};
pub use ktheory::{forgetful_class, k_adams, k_lambda_t, KRing};

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gw::GWElem;
use crate::poly::{Grading, RingElem, TruncSeries};
use crate::symfunc::universal_p_bounded;
use crate::symring::{SymClass, SymRing};

pub type LambdaSeries = TruncSeries<SymClass>;

/// A factor with `lambda_t = 1 + x t + gamma t^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Primitive {
    Tau,
    /// Zero-based generator index.
    U(usize),
}

/// One summand `mult * gamma^gamma * eps^eps * prod factors` of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub mult: BigInt,
    pub gamma: i64,
    pub eps: bool,
    pub factors: Vec<Primitive>,
}

/// The canonical decomposition along the normal-form basis.
pub fn canonical_parts(x: &SymClass) -> Vec<Part> {
    let mut out = Vec::new();
    for (alpha, c) in x.terms() {
        for (j, a, b, v) in c.basis_terms() {
            let mut factors = Vec::new();
            if b == 1 {
                factors.push(Primitive::Tau);
            }
            for (i, &e) in alpha.iter().enumerate() {
                factors.extend(std::iter::repeat(Primitive::U(i)).take(e as usize));
            }
            out.push(Part { mult: v, gamma: j, eps: a == 1, factors });
        }
    }
    out
}

/// The value a part denotes.
pub fn part_value(ring: &Arc<SymRing>, p: &Part) -> Result<SymClass> {
    let mut x = SymClass::constant(ring, GWElem::gamma_pow(p.gamma).scale(&p.mult));
    if p.eps {
        x = x.scale(&GWElem::eps());
    }
    for f in &p.factors {
        x = x.mul(&primitive_value(ring, *f)?);
    }
    Ok(x)
}

fn primitive_value(ring: &Arc<SymRing>, p: Primitive) -> Result<SymClass> {
    match p {
        Primitive::Tau => Ok(SymClass::constant(ring, GWElem::tau())),
        Primitive::U(i) => SymClass::generator(ring, i),
    }
}

type MemoKey = (SymRing, Vec<Primitive>, usize);

fn memo() -> &'static Mutex<HashMap<MemoKey, LambdaSeries>> {
    static M: OnceLock<Mutex<HashMap<MemoKey, LambdaSeries>>> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `lambda_t` of a product of primitives (`1 + t` for the empty product).
fn product_series(ring: &Arc<SymRing>, factors: &[Primitive], order: usize) -> Result<LambdaSeries> {
    let key = ((**ring).clone(), factors.to_vec(), order);
    if let Some(s) = memo().lock().expect("memo lock").get(&key) {
        return Ok(s.clone());
    }
    let one = SymClass::one(ring);
    let gamma = SymClass::constant(ring, GWElem::gamma());
    let series = match factors.split_first() {
        None => TruncSeries::new(&one, vec![one.clone(), one.clone()], order),
        Some((first, rest)) => {
            let x0 = primitive_value(ring, *first)?;
            let mut s = TruncSeries::new(&one, vec![one.clone(), x0, gamma.clone()], order);
            let mut dim = 2usize;
            for f in rest {
                let y = primitive_value(ring, *f)?;
                let mut coeffs = vec![one.clone()];
                for n in 1..=order {
                    let (a, b) = (n.min(dim), n.min(2));
                    if n > a * b {
                        coeffs.push(SymClass::zero(ring));
                        continue;
                    }
                    let p = universal_p_bounded(n, a, b);
                    let mut vals: Vec<SymClass> = s.coeffs()[1..=a].to_vec();
                    vals.push(y.clone());
                    if b == 2 {
                        vals.push(gamma.clone());
                    }
                    coeffs.push(p.eval_ring(&vals, &one)?);
                }
                s = TruncSeries::new(&one, coeffs, order);
                dim = dim.saturating_mul(2).min(order.max(1));
            }
            s
        }
    };
    memo().lock().expect("memo lock").insert(key, series.clone());
    Ok(series)
}

/// `lambda_t` of one part, including its multiplicity.
fn part_series(ring: &Arc<SymRing>, p: &Part, order: usize) -> Result<LambdaSeries> {
    let mut s = product_series(ring, &p.factors, order)?;
    if p.eps {
        let minus_eps = GWElem::minus_one();
        let line = s.twist(|k, c| c.scale(&minus_eps.pow(k as u32)));
        s = line.inverse()?;
    }
    if p.gamma != 0 {
        let j = p.gamma;
        s = s.twist(|k, c| c.scale(&GWElem::gamma_pow(j * k as i64)));
    }
    let m = p.mult.to_i64().ok_or_else(|| Error::Index("multiplicity too large".into()))?;
    s.pow(m)
}

/// `lambda_t` of the sum of `parts`, multiplied in the given order.
pub fn lambda_t_parts(ring: &Arc<SymRing>, parts: &[Part], order: usize) -> Result<LambdaSeries> {
    let one = SymClass::one(ring);
    let mut acc = TruncSeries::one(&one, order);
    for p in parts {
        if p.mult.is_zero() {
            continue;
        }
        acc = acc.mul(&part_series(ring, p, order)?);
    }
    Ok(acc)
}

/// `lambda_t(x) mod t^{order+1}`. For homogeneous `x` of degree `d`, every
/// coefficient `lambda^n(x)` is checked to be homogeneous of degree `n d`.
pub fn lambda_t(x: &SymClass, order: usize) -> Result<LambdaSeries> {
    let s = lambda_t_parts(x.ring(), &canonical_parts(x), order)?;
    if let Grading::Homogeneous(d) = x.grading() {
        for (n, c) in s.coeffs().iter().enumerate() {
            match c.grading() {
                Grading::Zero => {}
                Grading::Homogeneous(e) if e == n as i64 * d => {}
                _ => return Err(Error::Grading),
            }
        }
    }
    Ok(s)
}

/// `lambda^n(x)`.
pub fn lambda(n: usize, x: &SymClass) -> Result<SymClass> {
    Ok(lambda_t(x, n)?.coeff(n)?.clone())
}

/// `psi^1, ..., psi^n` by Newton's identity from `lambda^1, ..., lambda^n`.
pub fn newton<R: RingElem>(series: &TruncSeries<R>, n: usize) -> Result<Vec<R>> {
    let l = series.coeffs();
    if n > series.order() {
        return Err(Error::Order { order: series.order(), needed: n });
    }
    let mut psi: Vec<R> = vec![l[0].zero_like()];
    for k in 1..=n {
        let sign = if k % 2 == 1 { k as i64 } else { -(k as i64) };
        let mut acc = l[k].scale_int(sign);
        for i in 1..k {
            let term = l[i].ring_mul(&psi[k - i]);
            acc = if i % 2 == 1 { acc.ring_add(&term) } else { acc.ring_sub(&term) };
        }
        psi.push(acc);
    }
    psi.remove(0);
    Ok(psi)
}

/// `psi^n(x)` for homogeneous `x`; `psi^0 = rank`.
pub fn adams(n: u32, x: &SymClass) -> Result<SymClass> {
    let d = x.degree()?;
    if n == 0 {
        return Ok(SymClass::constant(x.ring(), GWElem::from_bigint(x.rank()?)));
    }
    let s = lambda_t(x, n as usize)?;
    let out = newton(&s, n as usize)?.pop().expect("n >= 1");
    match out.grading() {
        Grading::Zero => Ok(out),
        Grading::Homogeneous(e) if e == d * n as i64 => Ok(out),
        _ => Err(Error::Grading),
    }
}

/// `psi^n` for any integer `n`; negative `n` uses `psi^{|n|}` in degrees
/// `0 mod 4` and `-psi^{|n|}` in degrees `2 mod 4`.
pub fn adams_signed(n: i64, x: &SymClass) -> Result<SymClass> {
    let v = adams(n.unsigned_abs() as u32, x)?;
    if n >= 0 {
        return Ok(v);
    }
    let d = x.degree()?;
    Ok(if d.rem_euclid(4) == 2 { v.neg() } else { v })
}

/// `psi^n` on the coefficient ring.
pub fn adams_gw(n: i64, x: &GWElem) -> Result<GWElem> {
    let v = adams_signed(n, &SymClass::constant(&SymRing::base(), x.clone()))?;
    Ok(v.as_constant().expect("no generators"))
}

/// `x_n` with `x_0 = 2`, `x_1 = x`, `x_n = x x_{n-1} - g x_{n-2}`.
fn chebyshev(x: &SymClass, g: &SymClass, n: u32) -> SymClass {
    let mut prev = SymClass::from_int(x.ring(), 2);
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul(&cur).sub(&g.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `psi^n` as the ring endomorphism fixed on generators:
/// `eps -> -(-eps)^n`, `gamma -> gamma^n`, and `tau`, `u_i` by the rank-2
/// recursion. An oracle independent of lambda series.
pub fn adams_by_substitution(n: i64, x: &SymClass) -> Result<SymClass> {
    let d = x.degree()?;
    let m = n.unsigned_abs() as u32;
    let ring = x.ring();
    let g = SymClass::constant(ring, GWElem::gamma());
    let tau_img = chebyshev(&SymClass::constant(ring, GWElem::tau()), &g, m);
    let u_img: Vec<SymClass> =
        (0..ring.k).map(|i| Ok(chebyshev(&SymClass::generator(ring, i)?, &g, m))).collect::<Result<_>>()?;
    let eps_img = GWElem::minus_one().pow(m).neg();
    let mut acc = SymClass::zero(ring);
    for (alpha, c) in x.terms() {
        for (j, a, b, v) in c.basis_terms() {
            let mut t = SymClass::constant(ring, GWElem::gamma_pow(j * m as i64).scale(&v));
            if a == 1 {
                t = t.scale(&eps_img);
            }
            if b == 1 {
                t = t.mul(&tau_img);
            }
            for (i, &e) in alpha.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&u_img[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
    }
    if n < 0 && d.rem_euclid(4) == 2 {
        acc = acc.neg();
    }
    Ok(acc)
}

/// Clear the primitive-product memo.
pub fn clear_memo() {
    memo().lock().expect("memo lock").clear();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(k: usize) -> Arc<SymRing> {
        SymRing::new(k, "u")
    }

    fn u(r: &Arc<SymRing>, i: usize) -> SymClass {
        SymClass::generator(r, i).unwrap()
    }

    fn c(r: &Arc<SymRing>, x: GWElem) -> SymClass {
        SymClass::constant(r, x)
    }

    #[test]
    fn rank_two_generator() {
        let r = ring(1);
        let s = lambda_t(&u(&r, 0), 2).unwrap();
        assert_eq!(s.coeffs()[1], u(&r, 0));
        assert_eq!(s.coeffs()[2], c(&r, GWElem::gamma()));
    }

    #[test]
    fn sum_of_generators() {
        let r = ring(2);
        let x = u(&r, 0).add(&u(&r, 1));
        assert_eq!(lambda(2, &x).unwrap().to_text(), "u1*u2 + 2*gamma");
    }

    #[test]
    fn product_of_generators() {
        let r = ring(2);
        let x = u(&r, 0).mul(&u(&r, 1));
        assert_eq!(lambda(2, &x).unwrap().to_text(), "u1^2*gamma + u2^2*gamma - 2*gamma^2");
    }

    #[test]
    fn line_element() {
        let r = ring(0);
        let s = lambda_t(&c(&r, GWElem::minus_one()), 3).unwrap();
        assert_eq!(s.coeffs()[1], c(&r, GWElem::minus_one()));
        assert!(s.coeffs()[2].is_zero());
        assert!(s.coeffs()[3].is_zero());
        let h = lambda_t(&c(&r, GWElem::h()), 3).unwrap();
        assert_eq!(h.coeffs()[2], c(&r, GWElem::minus_one()));
    }

    #[test]
    fn psi_tau_examples() {
        let tau = GWElem::tau();
        assert_eq!(adams_gw(2, &tau).unwrap().to_text(), "-2*eps*gamma");
        assert_eq!(adams_gw(3, &tau).unwrap().to_text(), "tau*gamma");
        assert_eq!(adams_gw(-1, &tau).unwrap(), -tau.clone());
        assert_eq!(adams_gw(-2, &tau).unwrap().to_text(), "2*eps*gamma");
        assert_eq!(adams_gw(-1, &GWElem::gamma()).unwrap(), GWElem::gamma());
        assert_eq!(adams_gw(0, &tau).unwrap(), GWElem::from_int(2));
    }

    #[test]
    fn psi_one_is_identity() {
        let r = ring(2);
        let x = u(&r, 0).mul(&u(&r, 1));
        assert_eq!(adams(1, &x).unwrap(), x);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let r = ring(1);
        assert_eq!(adams(2, &u(&r, 0).add(&SymClass::one(&r))), Err(Error::Grading));
    }

    #[test]
    fn substitution_oracle_agrees() {
        let r = ring(2);
        let xs = [
            u(&r, 0).mul(&u(&r, 1)),
            u(&r, 0).add(&c(&r, GWElem::tau())),
            c(&r, GWElem::from_parts(1, 3, -6, 0)),
            c(&r, GWElem::h()),
        ];
        for x in &xs {
            for n in -3..=5 {
                assert_eq!(adams_signed(n, x).unwrap(), adams_by_substitution(n, x).unwrap(), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn tau_squared_decomposition() {
        let r = ring(1);
        let direct = lambda_t(&u(&r, 0).scale(&(&GWElem::tau() * &GWElem::tau())), 5).unwrap();
        let parts = [Part {
            mult: 1.into(),
            gamma: 0,
            eps: false,
            factors: vec![Primitive::Tau, Primitive::U(0), Primitive::Tau],
        }];
        assert_eq!(lambda_t_parts(&r, &parts, 5).unwrap(), direct);
    }

    #[test]
    fn quotient_ring_works() {
        let r = SymRing::quotient(1, "u");
        let w = u(&r, 0).sub(&c(&r, GWElem::tau()));
        let p2 = adams(2, &w).unwrap();
        assert_eq!(p2, w.scale(&GWElem::tau().scale(&2.into())));
    }
}
