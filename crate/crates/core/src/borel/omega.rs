//! The classes `omega(n)` with `psi^n(u - tau) = omega(n) (u - tau)`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::gw::GWElem;
use crate::lambda::{adams, adams_gw};
use crate::params;
use crate::report::{Entry, VerificationReport};
use crate::symring::{SymClass, SymRing};

/// `omega(n)` together with its index; the value has degree `2n - 2` for `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaClass {
    pub n: u64,
    #[serde(serialize_with = "ser_gw")]
    pub value: GWElem,
}

fn ser_gw<S: serde::Serializer>(v: &GWElem, s: S) -> std::result::Result<S::Ok, S::Error> {
    v.to_json_value().serialize(s)
}

/// `omega(n)` by the recursion `omega(n) = tau omega(n-1) - gamma omega(n-2) + psi^{n-1}(tau)`.
pub fn omega(n: u64) -> GWElem {
    let (tau, gamma) = (GWElem::tau(), GWElem::gamma());
    let (mut prev, mut cur) = (GWElem::zero(), GWElem::one());
    if n == 0 {
        return prev;
    }
    for k in 2..=n {
        let psi = adams_gw(k as i64 - 1, &tau).expect("tau is homogeneous");
        let next = &(&(&tau * &cur) - &(&gamma * &prev)) + &psi;
        prev = cur;
        cur = next;
    }
    cur
}

/// Closed form: `(n^2/2) tau gamma^{(n-2)/2}` for even `n`,
/// `n ((n-1)/2 h + <-1>^{(n-1)/2}) gamma^{(n-1)/2}` for odd `n`.
pub fn omega_closed(n: u64) -> GWElem {
    if n == 0 {
        return GWElem::zero();
    }
    let ni = BigInt::from(n);
    if n % 2 == 0 {
        GWElem::tau().shift_gamma((n as i64 - 2) / 2).scale(&(&ni * &ni / 2))
    } else {
        let m = (n - 1) / 2;
        let inner = &GWElem::h().scale(&BigInt::from(m)) + &GWElem::minus_one().pow(m as u32);
        inner.shift_gamma(m as i64).scale(&ni)
    }
}

pub fn omega_class(n: u64) -> OmegaClass {
    OmegaClass { n, value: omega(n) }
}

/// `psi^n(u - tau)` in `Z[eps, tau, gamma^{±1}][u] / (u - tau)^2`, written as
/// `c0 + c1 (u - tau)`.
pub fn psi_u_minus_tau(n: u32) -> (GWElem, GWElem) {
    let r = SymRing::quotient(1, "u");
    let tau = GWElem::tau();
    let x = SymClass::generator(&r, 0).expect("k = 1").sub(&SymClass::constant(&r, tau.clone()));
    let y = adams(n, &x).expect("u - tau is homogeneous");
    let c1 = y.coefficient(&[1]);
    let c0 = &y.coefficient(&[0]) + &(&c1 * &tau);
    (c0, c1)
}

#[derive(Clone, Debug)]
pub struct OmegaBounds {
    pub closed_max: u64,
    pub compose_max: u64,
    pub quotient_max: u32,
    pub witness_max: u64,
}

impl Default for OmegaBounds {
    fn default() -> Self {
        OmegaBounds { closed_max: 10, compose_max: 5, quotient_max: 8, witness_max: 9 }
    }
}

fn cmp(lemma: &str, ps: Vec<crate::report::Param>, lhs: &GWElem, rhs: &GWElem) -> Entry {
    Entry::new(lemma, ps, lhs == rhs, lhs.to_text(), rhs.to_text())
}

pub fn check_omega_laws(b: &OmegaBounds) -> VerificationReport {
    let mut r = VerificationReport::new("omega");
    for n in 0..=b.closed_max {
        let w = omega(n);
        r.push(cmp("omega_closed", params![n as i64], &w, &omega_closed(n)));
        if n >= 1 {
            let d = w.degree().ok();
            let want = 2 * n as i64 - 2;
            r.push(Entry::new("omega_degree", params![n as i64], d == Some(want), format!("{d:?}"), format!("Some({want})")));
        }
    }
    for m in 2..=b.compose_max {
        for n in 2..=b.compose_max {
            let lhs = omega(m * n);
            let rhs = &omega(n) * &adams_gw(n as i64, &omega(m)).expect("omega(m) is homogeneous");
            r.push(cmp("omega_compose", params![m as i64, n as i64], &lhs, &rhs));
        }
    }
    for n in 1..=b.quotient_max {
        let (c0, c1) = psi_u_minus_tau(n);
        let w = omega(n as u64);
        r.push(Entry::new(
            "omega_quotient",
            params![n],
            c0.is_zero() && c1 == w,
            format!("{} + ({})*(u - tau)", c0.to_text(), c1.to_text()),
            format!("0 + ({})*(u - tau)", w.to_text()),
        ));
    }
    let (eps, one_plus_eps) = (GWElem::eps(), &GWElem::one() + &GWElem::eps());
    for n in 1..=b.witness_max {
        let w = omega(n);
        let ni = BigInt::from(n);
        if n % 2 == 1 {
            let m = (n - 1) / 2;
            let sign: i64 = if m % 2 == 0 { 1 } else { -1 };
            let f = &one_plus_eps.scale(&BigInt::from(m)) + &eps.pow(m as u32);
            let rhs = GWElem::gamma_pow(m as i64).scale(&(&ni * &ni * sign));
            r.push(cmp("localization_odd", params![n as i64], &(&w * &f), &rhs));
        } else {
            let rhs = GWElem::n_star(n).shift_gamma(n as i64 - 1).scale(&ni.pow(3));
            r.push(cmp("omega_sq", params![n as i64], &(&w * &w), &rhs));
        }
    }
    r.finalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!(omega(0).is_zero());
        assert!(omega(1).is_one());
        assert_eq!(omega(2).to_text(), "2*tau");
        assert_eq!(omega(3).to_text(), "3*gamma - 6*eps*gamma");
        assert_eq!(omega(4).to_text(), "8*tau*gamma");
        assert_eq!(omega(6).to_text(), "18*tau*gamma^2");
    }

    #[test]
    fn quotient_n2() {
        let (c0, c1) = psi_u_minus_tau(2);
        assert!(c0.is_zero());
        assert_eq!(c1, GWElem::tau().scale(&2.into()));
    }

    #[test]
    fn odd_witness_n3() {
        let f = &(&GWElem::one() + &GWElem::eps()) + &GWElem::eps();
        assert_eq!((&omega(3) * &f).to_text(), "-9*gamma");
    }

    #[test]
    fn even_square_n2() {
        // omega(2)^2 = 4 tau^2 = 8 gamma h
        assert_eq!((&omega(2) * &omega(2)), GWElem::h().shift_gamma(1).scale(&8.into()));
    }
}
