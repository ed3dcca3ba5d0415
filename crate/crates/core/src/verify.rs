//! Named verification suites.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::borel::{check_borel_prop, check_omega_laws, check_ternary, OmegaBounds};
use crate::error::{Error, Result};
use crate::forms::{check_forms, FormBounds};
use crate::gw::{check_coefficient_identities, GWElem};
use crate::lambda::{check_adams_hyperbolic, default_report, lambda_t, lambda_t_parts, Part, Primitive};
use crate::params;
use crate::poly::{Ctx, TruncSeries, ZPoly};
use crate::report::{Entry, VerificationReport};
use crate::rewrite::{critical_pairs, normal_form, random_word, to_gw, word_value, Strategy};
use crate::symfunc::check_appendix_b;
use crate::symring::{SymClass, SymRing};

/// Suite names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "appendix-a",
    "appendix-b",
    "coefficient-ring",
    "lambda-axioms",
    "adams-hyperbolic",
    "omega",
    "borel",
    "ternary",
    "forms",
];

/// Power-series group, line elements, twists and normal forms.
pub fn check_appendix_a() -> VerificationReport {
    let mut r = VerificationReport::new("appendix-a");
    let ctx = Ctx::polynomial(&["x", "y"]).expect("distinct names");
    let x = ZPoly::var(&ctx, "x").expect("declared");
    let y = ZPoly::var(&ctx, "y").expect("declared");
    let one = ZPoly::one(&ctx);

    for order in [2usize, 5, 8, 12] {
        let f = TruncSeries::new(&one, vec![one.clone(), x.clone(), &y * &y, &x - &y], order);
        let g = TruncSeries::new(&one, vec![one.clone(), y.clone(), x.clone()], order);
        let ok = f.inverse().map(|fi| fi.mul(&f) == TruncSeries::one(&one, order)).unwrap_or(false);
        r.push(Entry::new("series_inverse", params![order], ok, "f * f^-1", "1"));
        let lhs = f.mul(&g).inverse().ok();
        let rhs = f.inverse().and_then(|a| g.inverse().map(|b| a.mul(&b))).ok();
        r.push(Entry::new("series_group", params![order], lhs.is_some() && lhs == rhs, "(fg)^-1", "f^-1 g^-1"));
        // sum f_n t^n -> sum f_n x^n t^n is multiplicative
        let tw = |s: &TruncSeries<ZPoly>| s.twist(|k, c| c * &x.pow(k as u32));
        r.push(Entry::new("twist_hom", params![order], tw(&f.mul(&g)) == tw(&f).mul(&tw(&g)), "tw(fg)", "tw(f) tw(g)"));
    }
    let geo = TruncSeries::new(&one, vec![one.clone(), x.clone()], 2).inverse().expect("unit constant term");
    let want = TruncSeries::new(&one, vec![one.clone(), -&x, &x * &x], 2);
    r.push(Entry::new("series_inverse_geometric", params![], geo == want, format!("{:?}", geo.coeffs()), format!("{:?}", want.coeffs())));
    let bad = TruncSeries::new(&one, vec![ZPoly::from_i64(&ctx, 2), x.clone()], 3);
    r.push(Entry::new("series_invertibility", params![], bad.inverse().is_err(), "error", "error"));

    // lambda^i(1 + t x) = 0 for i > 1: the line element <-1>
    let ring = SymRing::new(2, "u");
    let line = SymClass::constant(&ring, GWElem::minus_one());
    match lambda_t(&line, 6) {
        Ok(s) => {
            let ok = s.coeffs()[1] == line && s.coeffs()[2..].iter().all(|c| c.is_zero());
            r.push(Entry::new("lambda_dim1", params![], ok, format!("{:?}", s.coeffs()), "1 + <-1> t"));
        }
        Err(e) => r.push(Entry::error("lambda_dim1", params![], e)),
    }

    // lambda^n(gamma^j x) = gamma^{jn} lambda^n(x)
    let u1 = SymClass::generator(&ring, 0).expect("k = 2");
    let u2 = SymClass::generator(&ring, 1).expect("k = 2");
    let tau = SymClass::constant(&ring, GWElem::tau());
    for (name, x) in [("u1", u1.clone()), ("u1*u2", u1.mul(&u2)), ("tau+u2", tau.add(&u2))] {
        for j in [-2i64, -1, 1, 3] {
            let ps = params![name, j];
            let e = (|| -> Result<Entry> {
                let lhs = lambda_t(&x.scale(&GWElem::gamma_pow(j)), 5)?;
                let base = lambda_t(&x, 5)?;
                let rhs = base.twist(|k, c| c.scale(&GWElem::gamma_pow(j * k as i64)));
                Ok(Entry::new("lambda_twist", ps.clone(), lhs == rhs, "lambda_t(gamma^j x)", "sum lambda^n(x) gamma^{jn} t^n"))
            })()
            .unwrap_or_else(|e| Entry::error("lambda_twist", ps, e));
            r.push(e);
        }
    }

    // Lambda(R) addition: lambda_t(x + y) = lambda_t(x) lambda_t(y), and negatives by inversion
    let samples = [("u1", u1.clone()), ("u2", u2.clone()), ("tau", tau.clone()), ("u1*u2", u1.mul(&u2))];
    for (a, (na, xa)) in samples.iter().enumerate() {
        for (nb, xb) in &samples[a..] {
            let ps = params![*na, *nb];
            let e = (|| -> Result<Entry> {
                let lhs = lambda_t(&xa.add(xb), 6)?;
                let rhs = lambda_t(xa, 6)?.mul(&lambda_t(xb, 6)?);
                Ok(Entry::new("lambda_additive", ps.clone(), lhs == rhs, "lambda_t(x+y)", "lambda_t(x) lambda_t(y)"))
            })()
            .unwrap_or_else(|e| Entry::error("lambda_additive", ps, e));
            r.push(e);
        }
        let ps = params![*na];
        let e = (|| -> Result<Entry> {
            let lhs = lambda_t(&xa.neg(), 6)?;
            let rhs = lambda_t(xa, 6)?.inverse()?;
            Ok(Entry::new("lambda_negative", ps.clone(), lhs == rhs, "lambda_t(-x)", "lambda_t(x)^-1"))
        })()
        .unwrap_or_else(|e| Entry::error("lambda_negative", ps, e));
        r.push(e);
    }
    // the empty product of primitives is the line element 1
    let ok = lambda_t_parts(&ring, &[Part { mult: 1.into(), gamma: 0, eps: false, factors: vec![] }], 4)
        .map(|s| s == lambda_t(&SymClass::one(&ring), 4).expect("1 is homogeneous"))
        .unwrap_or(false);
    r.push(Entry::new("lambda_one", params![], ok, "parts [1]", "1 + t"));
    let ok = lambda_t_parts(&ring, &[Part { mult: 1.into(), gamma: 0, eps: false, factors: vec![Primitive::Tau] }], 4)
        .map(|s| s.coeffs()[2] == SymClass::constant(&ring, GWElem::gamma()))
        .unwrap_or(false);
    r.push(Entry::new("lambda_rank2", params!["tau"], ok, "lambda^2(tau)", "gamma"));

    // normal-form confluence of the rewrite system
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut agree = 0;
    let total = 500;
    for _ in 0..total {
        let w = random_word(&mut rng, 12);
        let a = normal_form(&w, Strategy::Leftmost);
        let b = normal_form(&w, Strategy::Rightmost);
        if a == b && to_gw(&a) == word_value(&w) {
            agree += 1;
        }
    }
    r.push(Entry::new("rewrite_confluence", params![total], agree == total, format!("{agree}/{total}"), format!("{total}/{total}")));
    for (k, (w, a, b)) in critical_pairs().into_iter().enumerate() {
        r.push(Entry::new("critical_pair", params![k], a == b, format!("{w:?} -> {}", to_gw(&a)), to_gw(&b).to_text()));
    }
    r.finalize()
}

/// Run one suite with its default bounds.
pub fn run_suite(name: &str) -> Result<VerificationReport> {
    Ok(match name {
        "appendix-a" => check_appendix_a(),
        "appendix-b" => check_appendix_b(4),
        "coefficient-ring" => check_coefficient_identities(4, 6, 9),
        "lambda-axioms" => default_report(),
        "adams-hyperbolic" => check_adams_hyperbolic(4, &[0, 1, 2], 10),
        "omega" => check_omega_laws(&OmegaBounds::default()),
        "borel" => check_borel_prop(),
        "ternary" => check_ternary(),
        "forms" => check_forms(&FormBounds::default()),
        "all" => run_all(),
        _ => return Err(Error::Parse(format!("unknown suite `{name}`; expected one of {}, all", SUITES.join(", ")))),
    })
}

/// Every suite; lemma ids are prefixed with the suite name.
pub fn run_all() -> VerificationReport {
    let reports: Vec<VerificationReport> =
        SUITES.par_iter().map(|s| run_suite(s).expect("known suite")).collect();
    let mut all = VerificationReport::new("all");
    for rep in reports {
        for mut e in rep.entries {
            e.lemma = format!("{}/{}", rep.suite, e.lemma);
            all.push(e);
        }
    }
    all.finalize()
}
