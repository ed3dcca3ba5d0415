//! Ternary laws `F_i(v1, v2, v3) = b_i(E1 ⊗ E2 ⊗ E3)` for rank-2 symplectic
//! `E_j` with first Borel classes `v_j = u_j - tau`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;

use super::classes::{borel_formula, orbit_combination};
use crate::error::{Error, Result};
use crate::gw::GWElem;
use crate::lambda::{k_lambda_t, lambda_t, KRing};
use crate::params;
use crate::poly::{Ctx, VarId, ZPoly};
use crate::report::{Entry, VerificationReport};
use crate::symring::{SpecializedClass, Style, SymClass, SymRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theory {
    /// Hermitian K-theory, coefficients in `Z[eps, tau, gamma^{±1}]`.
    Gw,
    /// K-theory, coefficients in `Z[beta^{±1}]`.
    K,
    /// Witt theory: `eps -> 1`, `tau -> 0`, coefficients in `Z[gamma^{±1}]`.
    Witt,
}

impl Theory {
    pub fn name(self) -> &'static str {
        match self {
            Theory::Gw => "gw",
            Theory::K => "k",
            Theory::Witt => "witt",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gw" | "kq" | "hermitian" => Ok(Theory::Gw),
            "k" | "kgl" => Ok(Theory::K),
            "witt" | "w" => Ok(Theory::Witt),
            _ => Err(Error::Parse(format!("unknown theory `{s}` (expected gw, k or witt)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LawValue {
    Gw(SymClass),
    Specialized(SpecializedClass),
}

impl LawValue {
    /// Orbit-sum notation; flat notation if the value is not symmetric.
    pub fn render(&self, style: Style) -> String {
        match self {
            LawValue::Gw(x) => x.to_orbit_string(style).unwrap_or_else(|| match style {
                Style::Text => x.to_text(),
                Style::Pretty => x.to_pretty(),
                Style::Latex => x.to_latex(),
            }),
            LawValue::Specialized(x) => x.to_orbit_string(style).unwrap_or_else(|| format!("{:?}", x.terms)),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            LawValue::Gw(x) => x.is_symmetric(),
            LawValue::Specialized(x) => x.is_symmetric(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TernaryLaw {
    pub theory: Theory,
    pub index: usize,
    pub value: LawValue,
}

fn v_ring() -> Arc<SymRing> {
    SymRing::new(3, "v")
}

fn beta_ctx() -> Arc<Ctx> {
    Ctx::new(vec![VarId::laurent("beta")]).expect("one variable")
}

fn gamma_ctx() -> Arc<Ctx> {
    Ctx::new(vec![VarId::laurent("gamma")]).expect("one variable")
}

fn mono(ctx: &Arc<Ctx>, c: i64, e: i32) -> ZPoly {
    ZPoly::term(ctx, vec![e], BigInt::from(c)).expect("Laurent variable")
}

/// `eps -> -1`, `tau -> 2 beta^2`, `gamma -> beta^4`.
pub fn k_specialize(x: &SymClass) -> SpecializedClass {
    let c = beta_ctx();
    let imgs = [mono(&c, -1, 0), mono(&c, 2, 2), mono(&c, 1, 4), mono(&c, 1, -4)];
    x.specialize([&imgs[0], &imgs[1], &imgs[2], &imgs[3]])
}

/// `eps -> 1`, `tau -> 0`, gamma kept.
pub fn witt_specialize(x: &SymClass) -> SpecializedClass {
    let c = gamma_ctx();
    let imgs = [mono(&c, 1, 0), ZPoly::zero(&c), mono(&c, 1, 1), mono(&c, 1, -1)];
    x.specialize([&imgs[0], &imgs[1], &imgs[2], &imgs[3]])
}

/// Rank: `eps -> -1`, `tau -> 2`, `gamma -> 1`, generators kept formally.
pub fn rank_specialize(x: &SymClass) -> SpecializedClass {
    let c = Ctx::new(vec![]).expect("empty context");
    let imgs = [ZPoly::from_i64(&c, -1), ZPoly::from_i64(&c, 2), ZPoly::one(&c), ZPoly::one(&c)];
    x.specialize([&imgs[0], &imgs[1], &imgs[2], &imgs[3]])
}

/// `beta -> 1` on a K-theory law.
pub fn at_beta_one(x: &SpecializedClass) -> Result<SpecializedClass> {
    let c = Ctx::new(vec![]).expect("empty context");
    // a Laurent polynomial in beta evaluates at 1 to its coefficient sum
    let terms = x.terms.iter().map(|(e, p)| {
        let sum: BigInt = p.terms().map(|(_, c)| c.clone()).sum();
        (e.clone(), ZPoly::constant(&c, sum))
    });
    Ok(SpecializedClass::from_terms(x.k, &x.prefix, terms))
}

/// `b_i(E1 ⊗ E2 ⊗ E3)` in `u1, u2, u3`, before substituting `u_j = v_j + tau`.
pub fn borel_of_triple(i: usize) -> Result<SymClass> {
    let ring = SymRing::new(3, "u");
    let e = SymClass::term(&ring, vec![1, 1, 1], GWElem::gamma_pow(-1))?;
    let lam = lambda_t(&e, 4)?;
    let k = |c: GWElem| SymClass::constant(&ring, c);
    Ok(borel_formula(i, lam.coeffs(), &k(GWElem::eps()), &k(GWElem::tau()), &k(GWElem::gamma())))
}

fn gw_law(i: usize) -> Result<SymClass> {
    borel_of_triple(i)?.shift_generators(&GWElem::tau(), &v_ring())
}

/// Computed laws `F_1..F_4`.
pub fn ternary_laws(theory: Theory) -> Result<Vec<TernaryLaw>> {
    (1..=4)
        .map(|i| {
            let f = gw_law(i)?;
            let value = match theory {
                Theory::Gw => LawValue::Gw(f),
                Theory::K => LawValue::Specialized(k_specialize(&f)),
                Theory::Witt => LawValue::Specialized(witt_specialize(&f)),
            };
            Ok(TernaryLaw { theory, index: i, value })
        })
        .collect()
}

/// `GW` law tables: `(partition, coefficient)`, coefficient `gamma^j (a + b eps + c tau)`.
fn gw_table(i: usize) -> Vec<(&'static [u32], GWElem)> {
    let p = GWElem::from_parts;
    match i {
        1 => vec![(&[1], p(0, 2, -2, 0)), (&[1, 1], p(-1, 0, 0, 1)), (&[1, 1, 1], p(-1, 1, 0, 0))],
        2 => vec![
            (&[2], p(0, 2, -4, 0)),
            (&[1, 1], p(0, 2, -2, 0)),
            (&[2, 1], p(-1, 0, 0, 2)),
            (&[1, 1, 1], p(-1, 0, 0, -3)),
            (&[2, 2], p(-1, 1, 0, 0)),
        ],
        3 => vec![
            (&[3], p(0, 2, -2, 0)),
            (&[2, 1], p(0, -2, 2, 0)),
            (&[1, 1, 1], p(0, 16, -24, 0)),
            (&[3, 1], p(-1, 0, 0, 1)),
            (&[2, 2], p(-1, 0, 0, -2)),
            (&[2, 1, 1], p(-1, 0, 0, 3)),
            (&[3, 1, 1], p(-1, 1, 0, 0)),
        ],
        4 => vec![
            (&[4], p(0, 1, 0, 0)),
            (&[3, 1], p(0, -2, 2, 0)),
            (&[2, 2], p(0, 2, -4, 0)),
            (&[2, 1, 1], p(0, 2, -2, 0)),
            (&[3, 1, 1], p(-1, 0, 0, -1)),
            (&[2, 2, 1], p(-1, 0, 0, 2)),
            (&[2, 2, 2], p(-1, 1, 0, 0)),
        ],
        _ => vec![],
    }
}

/// K-theory tables: `(partition, integer, beta exponent)`.
fn k_table(i: usize) -> Vec<(&'static [u32], i64, i32)> {
    match i {
        1 => vec![(&[1], 4, 0), (&[1, 1], 2, -2), (&[1, 1, 1], 1, -4)],
        2 => vec![(&[2], 6, 0), (&[1, 1], 4, 0), (&[2, 1], 4, -2), (&[1, 1, 1], -6, -2), (&[2, 2], 1, -4)],
        3 => vec![
            (&[3], 4, 0),
            (&[2, 1], -4, 0),
            (&[1, 1, 1], 40, 0),
            (&[3, 1], 2, -2),
            (&[2, 2], -4, -2),
            (&[2, 1, 1], 6, -2),
            (&[3, 1, 1], 1, -4),
        ],
        4 => vec![
            (&[4], 1, 0),
            (&[3, 1], -4, 0),
            (&[2, 2], 6, 0),
            (&[2, 1, 1], 4, 0),
            (&[3, 1, 1], -2, -2),
            (&[2, 2, 1], 4, -2),
            (&[2, 2, 2], 1, -4),
        ],
        _ => vec![],
    }
}

fn expected_gw(i: usize) -> SymClass {
    orbit_combination(&v_ring(), &gw_table(i))
}

fn expected_k(i: usize) -> SpecializedClass {
    let c = beta_ctx();
    let ring = v_ring();
    let mut terms = Vec::new();
    for (p, n, b) in k_table(i) {
        let orbit = super::classes::orbit_sum(&ring, p);
        for (e, _) in orbit.terms() {
            terms.push((e.clone(), mono(&c, n, b)));
        }
    }
    SpecializedClass::from_terms(3, "v", terms)
}

/// The displayed laws, for comparison.
pub fn expected_laws(theory: Theory) -> Vec<TernaryLaw> {
    (1..=4)
        .map(|i| {
            let value = match theory {
                Theory::Gw => LawValue::Gw(expected_gw(i)),
                Theory::K => LawValue::Specialized(expected_k(i)),
                Theory::Witt => LawValue::Specialized(witt_specialize(&expected_gw(i))),
            };
            TernaryLaw { theory, index: i, value }
        })
        .collect()
}

/// The K-theory laws computed inside `Z[beta^{±1}][u1, u2, u3]` with its own
/// lambda structure, independent of the coefficient-ring engine.
pub fn k_laws_direct() -> Result<Vec<SpecializedClass>> {
    let kr = KRing::new(3, "u");
    let u: Vec<ZPoly> = (1..=3).map(|i| ZPoly::var(&kr.ctx, &format!("u{i}"))).collect::<Result<_>>()?;
    let e = (&(&u[0] * &u[1]) * &u[2]).shift(&crate::poly::Monomial::from_exps(vec![0, 0, 0, -4]))?;
    let lam = k_lambda_t(&e, &kr, 4)?;
    let eps = ZPoly::from_i64(&kr.ctx, -1);
    let tau = kr.beta_pow(2).scale(&BigInt::from(2));
    let gamma = kr.beta_pow(4);
    let target = Ctx::new(vec![VarId::poly("v1"), VarId::poly("v2"), VarId::poly("v3"), VarId::laurent("beta")])?;
    let mut bind = BTreeMap::new();
    for i in 1..=3 {
        let v = ZPoly::var(&target, &format!("v{i}"))?;
        let t = tau.reindex(&target)?;
        bind.insert(format!("u{i}"), &v + &t);
    }
    bind.insert("beta".to_string(), ZPoly::var(&target, "beta")?);
    let bc = beta_ctx();
    (1..=4)
        .map(|i| {
            let b = borel_formula(i, lam.coeffs(), &eps, &tau, &gamma);
            let f = b.substitute(&bind, &target)?;
            let terms = f.terms().map(|(m, c)| {
                let e: Vec<u32> = m.exps()[..3].iter().map(|&x| x as u32).collect();
                (e, mono(&bc, 1, m.exp(3)).scale(c))
            });
            Ok(SpecializedClass::from_terms(3, "v", terms.collect::<Vec<_>>()))
        })
        .collect()
}

pub fn check_ternary() -> VerificationReport {
    let mut r = VerificationReport::new("ternary");
    let ring_u = SymRing::new(3, "u");
    match borel_of_triple(1) {
        Ok(b1) => {
            let want = SymClass::term(&ring_u, vec![1, 1, 1], GWElem::gamma_pow(-1))
                .expect("k = 3")
                .sub(&SymClass::constant(&ring_u, GWElem::tau().scale(&BigInt::from(4))));
            r.push(Entry::new("b1_triple", params![], b1 == want, b1.to_text(), want.to_text()));
        }
        Err(e) => r.push(Entry::error("b1_triple", params![], e)),
    }
    for theory in [Theory::Gw, Theory::K, Theory::Witt] {
        let computed = match ternary_laws(theory) {
            Ok(c) => c,
            Err(e) => {
                r.push(Entry::error("ternary_law", params![theory.name()], e));
                continue;
            }
        };
        for (c, x) in computed.iter().zip(expected_laws(theory)) {
            r.push(Entry::new(
                "ternary_law",
                params![theory.name(), c.index],
                c.value == x.value,
                c.value.render(Style::Text),
                x.value.render(Style::Text),
            ));
            r.push(Entry::new(
                "ternary_symmetric",
                params![theory.name(), c.index],
                c.value.is_symmetric(),
                format!("{}", c.value.is_symmetric()),
                "true",
            ));
            if let LawValue::Gw(f) = &c.value {
                let d = f.degree().ok();
                let want = 2 * c.index as i64;
                r.push(Entry::new("ternary_degree", params![c.index], d == Some(want), format!("{d:?}"), format!("Some({want})")));
            }
        }
    }
    match (ternary_laws(Theory::Gw), k_laws_direct()) {
        (Ok(gw), Ok(kd)) => {
            let kx = expected_laws(Theory::K);
            for ((g, k), x) in gw.iter().zip(&kd).zip(&kx) {
                let LawValue::Gw(f) = &g.value else { continue };
                let LawValue::Specialized(kxv) = &x.value else { continue };
                r.push(Entry::new(
                    "ternary_k_direct",
                    params![g.index],
                    k == kxv,
                    k.to_orbit_string(Style::Text).unwrap_or_default(),
                    kxv.to_orbit_string(Style::Text).unwrap_or_default(),
                ));
                let rk = rank_specialize(f);
                let ok = at_beta_one(k).map(|kb| kb == rk).unwrap_or(false);
                r.push(Entry::new(
                    "ternary_rank",
                    params![g.index],
                    ok,
                    rk.to_orbit_string(Style::Text).unwrap_or_default(),
                    at_beta_one(k).ok().and_then(|v| v.to_orbit_string(Style::Text)).unwrap_or_default(),
                ));
            }
        }
        (Err(e), _) | (_, Err(e)) => r.push(Entry::error("ternary_k_direct", params![], e)),
    }
    r.finalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_first_law_renders() {
        let laws = ternary_laws(Theory::K).unwrap();
        assert_eq!(laws[0].value.render(Style::Pretty), "4σ(v1)+2β⁻²σ(v1v2)+β⁻⁴v1v2v3");
    }

    #[test]
    fn gw_laws_match_tables() {
        for (c, x) in ternary_laws(Theory::Gw).unwrap().iter().zip(expected_laws(Theory::Gw)) {
            assert_eq!(c.value, x.value, "F{}", c.index);
        }
    }

    #[test]
    fn witt_first_two() {
        let w = ternary_laws(Theory::Witt).unwrap();
        assert_eq!(w[0].value.render(Style::Text), "gamma^-1*u1*u2*u3".replace('u', "v"));
        assert_eq!(w[1].value.render(Style::Text), "-2*sigma(v1^2) + gamma^-1*sigma(v1^2*v2^2)");
    }

    #[test]
    fn theory_parse() {
        assert_eq!("GW".parse::<Theory>().unwrap(), Theory::Gw);
        assert!("x".parse::<Theory>().is_err());
    }
}
