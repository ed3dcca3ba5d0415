//! Borel classes of split symplectic bundles and `lambda^i(u1 u2 u3)`.

use std::sync::Arc;

use crate::error::Result;
use crate::gw::GWElem;
use crate::lambda::{lambda, lambda_t};
use crate::params;
use crate::poly::RingElem;
use crate::report::{Entry, VerificationReport};
use crate::symfunc::universal_r_composed_bounded;
use crate::symring::{SymClass, SymRing};

/// `sigma(e)`: the sum over the distinct permutations of the exponent vector.
pub fn orbit_sum(ring: &Arc<SymRing>, partition: &[u32]) -> SymClass {
    let mut e = partition.to_vec();
    e.resize(ring.k, 0);
    e.sort_unstable();
    let mut acc = SymClass::zero(ring);
    loop {
        acc = acc.add(&SymClass::term(ring, e.clone(), GWElem::one()).expect("length k"));
        if !next_permutation(&mut e) {
            break;
        }
    }
    acc
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `sum_orbits c * sigma(partition)`.
pub fn orbit_combination(ring: &Arc<SymRing>, table: &[(&[u32], GWElem)]) -> SymClass {
    table.iter().fold(SymClass::zero(ring), |acc, (p, c)| acc.add(&orbit_sum(ring, p).scale(c)))
}

/// `sigma_i(e_1 - tau, ..., e_k - tau)` in `Z[eps, tau, gamma^{±1}][e_1..e_k]`.
pub fn borel_sum_classes(k: usize, i: usize) -> SymClass {
    let ring = SymRing::new(k, "e");
    let tau = SymClass::constant(&ring, GWElem::tau());
    // coefficients of prod_j (1 + (e_j - tau) t)
    let mut c = vec![SymClass::one(&ring)];
    for j in 0..k {
        let x = SymClass::generator(&ring, j).expect("j < k").sub(&tau);
        let mut next = c.clone();
        next.push(SymClass::zero(&ring));
        for d in 0..c.len() {
            next[d + 1] = next[d + 1].add(&c[d].mul(&x));
        }
        c = next;
    }
    c.get(i).cloned().unwrap_or_else(|| SymClass::zero(&ring))
}

/// `b_i` of a rank-8 symplectic class `e` from its lambda powers
/// (`lam[k] = lambda^k(e)`, `lam[1] = e`):
///
/// * `b_1 = e - 4 tau`
/// * `b_2 = lambda^2(e) - 3 tau e + 4(2 - 3 eps) gamma`
/// * `b_3 = lambda^3(e) - 2 tau lambda^2(e) + 3(1 - 2 eps) gamma e - 8 tau gamma`
/// * `b_4 = lambda^4(e) - tau lambda^3(e) - 2 eps gamma lambda^2(e) - tau gamma e + 2 gamma^2`
///
/// `eps`, `tau`, `gamma` are the images of the constants in the target ring.
pub fn borel_formula<R: RingElem>(i: usize, lam: &[R], eps: &R, tau: &R, gamma: &R) -> R {
    let e = &lam[1];
    let eg = eps.ring_mul(gamma);
    let tg = tau.ring_mul(gamma);
    match i {
        1 => e.ring_sub(&tau.scale_int(4)),
        2 => lam[2]
            .ring_sub(&tau.ring_mul(e).scale_int(3))
            .ring_add(&gamma.scale_int(8))
            .ring_sub(&eg.scale_int(12)),
        3 => lam[3]
            .ring_sub(&tau.ring_mul(&lam[2]).scale_int(2))
            .ring_add(&gamma.scale_int(3).ring_sub(&eg.scale_int(6)).ring_mul(e))
            .ring_sub(&tg.scale_int(8)),
        4 => lam[4]
            .ring_sub(&tau.ring_mul(&lam[3]))
            .ring_sub(&eg.scale_int(2).ring_mul(&lam[2]))
            .ring_sub(&tg.ring_mul(e))
            .ring_add(&gamma.ring_mul(gamma).scale_int(2)),
        _ => e.zero_like(),
    }
}

/// Values of `lambda^k(e_1 + ... + e_4)` as symmetric functions:
/// `sigma_1`, `sigma_2 + 4 gamma`, `sigma_3 + 3 sigma_1 gamma`, `sigma_4 + 2 sigma_2 gamma + 6 gamma^2`.
pub fn preliminary_lambda_values(ring: &Arc<SymRing>) -> Vec<SymClass> {
    let g = |j: i64| SymClass::constant(ring, GWElem::gamma_pow(j));
    let s: Vec<SymClass> = (0..=4).map(|k| orbit_sum(ring, &vec![1; k])).collect();
    vec![
        SymClass::one(ring),
        s[1].clone(),
        s[2].add(&g(1).scale_int(&4.into())),
        s[3].add(&s[1].mul(&g(1)).scale_int(&3.into())),
        s[4].add(&s[2].mul(&g(1)).scale_int(&2.into())).add(&g(2).scale_int(&6.into())),
    ]
}

fn constants(ring: &Arc<SymRing>) -> (SymClass, SymClass, SymClass) {
    (
        SymClass::constant(ring, GWElem::eps()),
        SymClass::constant(ring, GWElem::tau()),
        SymClass::constant(ring, GWElem::gamma()),
    )
}

pub fn check_borel_prop() -> VerificationReport {
    let mut r = VerificationReport::new("borel");
    let ring = SymRing::new(4, "e");
    let lam = preliminary_lambda_values(&ring);
    let (eps, tau, gamma) = constants(&ring);
    for i in 1..=4 {
        let lhs = borel_sum_classes(4, i);
        let rhs = borel_formula(i, &lam, &eps, &tau, &gamma);
        r.push(Entry::new("borel_prop", params![i], lhs == rhs, lhs.to_text(), rhs.to_text()));
    }
    // the preliminary values themselves, from the lambda engine
    let sum = (0..4).fold(SymClass::zero(&ring), |a, j| a.add(&SymClass::generator(&ring, j).expect("j < 4")));
    match lambda_t(&sum, 4) {
        Ok(s) => {
            for k in 1..=4 {
                let lhs = &s.coeffs()[k];
                r.push(Entry::new("lambda_sum", params![k], *lhs == lam[k], lhs.to_text(), lam[k].to_text()));
            }
        }
        Err(e) => r.push(Entry::error("lambda_sum", params![], e)),
    }
    for i in 1..=TRIPLE_MAX {
        let ps = params![i];
        let entry = (|| -> Result<Entry> {
            let c = lambda_triple_product(i)?;
            let ok = c.r_route == c.engine && c.closed_form.as_ref().map_or(true, |f| *f == c.engine);
            let rhs = match &c.closed_form {
                Some(f) => format!("{} | {}", c.r_route.to_text(), f.to_text()),
                None => c.r_route.to_text(),
            };
            Ok(Entry::new("lambda_triple", ps.clone(), ok, c.engine.to_text(), rhs))
        })()
        .unwrap_or_else(|e| Entry::error("lambda_triple", ps, e));
        r.push(entry);
    }
    r.finalize()
}

/// `u1 u2 u3` has lambda-dimension 8.
pub const TRIPLE_MAX: usize = 8;

/// `lambda^i(u1 u2 u3)` from the engine, from `R_i` and, for `i <= 4`, the closed form.
#[derive(Clone, Debug)]
pub struct TripleProduct {
    pub i: usize,
    pub engine: SymClass,
    pub r_route: SymClass,
    pub closed_form: Option<SymClass>,
}

pub fn triple_product_closed(ring: &Arc<SymRing>, i: usize) -> Option<SymClass> {
    let g = |j: i64, n: i64| GWElem::gamma_pow(j).scale(&n.into());
    Some(match i {
        0 => SymClass::one(ring),
        1 => orbit_sum(ring, &[1, 1, 1]),
        2 => orbit_combination(ring, &[(&[2, 2], g(1, 1)), (&[2], g(2, -2)), (&[], g(3, 4))]),
        3 => orbit_combination(ring, &[(&[3, 1, 1], g(2, 1)), (&[1, 1, 1], g(3, -5))]),
        4 => orbit_combination(
            ring,
            &[(&[4], g(4, 1)), (&[2, 2, 2], g(3, 1)), (&[2], g(5, -4)), (&[], g(6, 6))],
        ),
        _ => return None,
    })
}

/// `R_i(u1, gamma, u2, gamma, u3, gamma)` with the arities clamped to `min(i, 2)`.
pub fn triple_product_r_route(ring: &Arc<SymRing>, i: usize) -> Result<SymClass> {
    if i == 0 {
        return Ok(SymClass::one(ring));
    }
    let a = i.min(2);
    let r = universal_r_composed_bounded(i, a, a, a);
    let gamma = SymClass::constant(ring, GWElem::gamma());
    let mut vals = Vec::new();
    for j in 0..3 {
        vals.push(SymClass::generator(ring, j)?);
        if a == 2 {
            vals.push(gamma.clone());
        }
    }
    // context order is X1..Xa, Y1..Ya, Z1..Za
    r.eval_ring(&vals, &SymClass::one(ring))
}

pub fn lambda_triple_product(i: usize) -> Result<TripleProduct> {
    let ring = SymRing::new(3, "u");
    let x = orbit_sum(&ring, &[1, 1, 1]);
    Ok(TripleProduct {
        i,
        engine: lambda(i, &x)?,
        r_route: triple_product_r_route(&ring, i)?,
        closed_form: triple_product_closed(&ring, i),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_classes() {
        assert_eq!(borel_sum_classes(1, 1).to_text(), "e1 - tau");
        let b = borel_sum_classes(4, 1);
        let ring = b.ring().clone();
        let want = orbit_sum(&ring, &[1]).sub(&SymClass::constant(&ring, GWElem::tau().scale(&4.into())));
        assert_eq!(b, want);
        // sigma_2 - 3 tau sigma_1 + 6 tau^2, tau^2 = 2 gamma h
        let t2 = GWElem::h().shift_gamma(1).scale(&12.into());
        let want = orbit_sum(&ring, &[1, 1])
            .sub(&orbit_sum(&ring, &[1]).scale(&GWElem::tau().scale(&3.into())))
            .add(&SymClass::constant(&ring, t2));
        assert_eq!(borel_sum_classes(4, 2), want);
    }

    #[test]
    fn orbits() {
        let r = SymRing::new(3, "u");
        assert_eq!(orbit_sum(&r, &[2, 1]).len(), 6);
        assert_eq!(orbit_sum(&r, &[1, 1]).len(), 3);
        assert_eq!(orbit_sum(&r, &[]).to_text(), "1");
    }

    #[test]
    fn triple_products_agree() {
        for i in 0..=4 {
            let t = lambda_triple_product(i).unwrap();
            assert_eq!(t.engine, t.r_route, "i={i}");
            assert_eq!(Some(t.engine.clone()), t.closed_form, "i={i}");
        }
    }

    #[test]
    fn borel_prop_holds() {
        let r = check_borel_prop();
        let f: Vec<_> = r.failures().collect();
        assert!(f.is_empty(), "{f:?}");
    }
}
