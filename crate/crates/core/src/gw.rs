//! The graded coefficient ring `Z[eps, tau, gamma^{±1}]` modulo
//! `eps^2 = 1`, `eps*tau = -tau`, `tau^2 = 2*gamma*(1 - eps)`.
//!
//! Every element has a unique expression `sum_j (a_j + b_j eps + c_j tau) gamma^j`
//! with integer `a_j, b_j, c_j`. Degrees: `eps` 0, `tau` 2, `gamma` 4.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params;
use crate::poly::render::{join_terms, superscript};
use crate::poly::{Ctx, Grading, RingElem, VarId, ZPoly};
use crate::report::{Entry, VerificationReport};

/// Coefficients of `1`, `eps`, `tau` at one power of `gamma`.
type Triple = [BigInt; 3];

fn zero_triple() -> Triple {
    [BigInt::zero(), BigInt::zero(), BigInt::zero()]
}

fn triple_is_zero(t: &Triple) -> bool {
    t.iter().all(Zero::is_zero)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GWElem {
    /// gamma exponent -> (a, b, c); never stores an all-zero triple.
    terms: BTreeMap<i64, Triple>,
}

impl GWElem {
    pub fn zero() -> Self {
        GWElem::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::basis(0, [n, BigInt::zero(), BigInt::zero()])
    }

    fn basis(j: i64, t: Triple) -> Self {
        let mut terms = BTreeMap::new();
        if !triple_is_zero(&t) {
            terms.insert(j, t);
        }
        GWElem { terms }
    }

    /// `a + b eps + c tau` times `gamma^j`.
    pub fn from_parts(j: i64, a: i64, b: i64, c: i64) -> Self {
        Self::basis(j, [a.into(), b.into(), c.into()])
    }

    pub fn eps() -> Self {
        Self::from_parts(0, 0, 1, 0)
    }

    pub fn tau() -> Self {
        Self::from_parts(0, 0, 0, 1)
    }

    pub fn gamma() -> Self {
        Self::gamma_pow(1)
    }

    pub fn gamma_pow(j: i64) -> Self {
        Self::from_parts(j, 1, 0, 0)
    }

    /// `h = 1 - eps`, the hyperbolic symmetric plane.
    pub fn h() -> Self {
        Self::from_parts(0, 1, -1, 0)
    }

    /// `<-1> = -eps`.
    pub fn minus_one() -> Self {
        Self::from_parts(0, 0, -1, 0)
    }

    /// `h_{2i}(1)`: `tau gamma^{(i-1)/2}` for odd `i`, `h gamma^{i/2}` for even `i`.
    pub fn hyperbolic_unit(i: i64) -> Self {
        if i.is_odd() {
            Self::from_parts((i - 1).div_euclid(2), 0, 0, 1)
        } else {
            Self::from_parts(i.div_euclid(2), 1, -1, 0)
        }
    }

    /// `n*`: `n` for odd `n`, `(n/2) h` for even `n`.
    pub fn n_star(n: u64) -> Self {
        let n = n as i64;
        if n.is_odd() {
            Self::from_int(n)
        } else {
            Self::from_parts(0, n / 2, -n / 2, 0)
        }
    }

    /// Normal form of the word `eps^e tau^t gamma^g`.
    pub fn monomial(e: u32, t: u32, g: i64) -> Self {
        let sign: i64 = if e % 2 == 1 { -1 } else { 1 };
        if t == 0 {
            return Self::from_parts(g, if e % 2 == 0 { 1 } else { 0 }, (e % 2) as i64, 0);
        }
        let k = t / 2;
        if t % 2 == 1 {
            // tau^{2k+1} = (2 gamma h)^k tau = 4^k gamma^k tau, since h tau = 2 tau
            let c = BigInt::from(4).pow(k) * sign;
            Self::basis(g + k as i64, [BigInt::zero(), BigInt::zero(), c])
        } else {
            // tau^{2k} = 2^k gamma^k h^k = 2^{2k-1} gamma^k h; eps h = -h
            let c = BigInt::from(2).pow(2 * k - 1) * sign;
            Self::basis(g + k as i64, [c.clone(), -c, BigInt::zero()])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `(a, b, c)` at `gamma^j`.
    pub fn component(&self, j: i64) -> (BigInt, BigInt, BigInt) {
        match self.terms.get(&j) {
            Some([a, b, c]) => (a.clone(), b.clone(), c.clone()),
            None => (BigInt::zero(), BigInt::zero(), BigInt::zero()),
        }
    }

    /// Iterate `(j, [a, b, c])` in ascending `j`.
    pub fn components(&self) -> impl DoubleEndedIterator<Item = (i64, &[BigInt; 3])> {
        self.terms.iter().map(|(j, t)| (*j, t))
    }

    /// The basis expansion: `(j, eps exponent, tau exponent, coefficient)` with
    /// `(eps, tau)` one of `(0,0)`, `(1,0)`, `(0,1)`.
    pub fn basis_terms(&self) -> Vec<(i64, u8, u8, BigInt)> {
        let mut out = Vec::new();
        for (&j, [a, b, c]) in &self.terms {
            for (e, t, v) in [(0, 0, a), (1, 0, b), (0, 1, c)] {
                if !v.is_zero() {
                    out.push((j, e, t, v.clone()));
                }
            }
        }
        out
    }

    fn insert_add(terms: &mut BTreeMap<i64, Triple>, j: i64, idx: usize, v: BigInt) {
        if v.is_zero() {
            return;
        }
        let slot = terms.entry(j).or_insert_with(zero_triple);
        slot[idx] += v;
        if triple_is_zero(slot) {
            terms.remove(&j);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&j, t) in &rhs.terms {
            for (idx, v) in t.iter().enumerate() {
                Self::insert_add(&mut terms, j, idx, v.clone());
            }
        }
        GWElem { terms }
    }

    pub fn neg(&self) -> Self {
        GWElem { terms: self.terms.iter().map(|(j, [a, b, c])| (*j, [-a, -b, -c])).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (&j, [a, b, c]) in &self.terms {
            for (&k, [x, y, z]) in &rhs.terms {
                let cz = c * z;
                Self::insert_add(&mut terms, j + k, 0, a * x + b * y);
                Self::insert_add(&mut terms, j + k, 1, a * y + b * x);
                Self::insert_add(&mut terms, j + k, 2, a * z + c * x - b * z - c * y);
                let two_cz = &cz * BigInt::from(2);
                Self::insert_add(&mut terms, j + k + 1, 1, -&two_cz);
                Self::insert_add(&mut terms, j + k + 1, 0, two_cz);
            }
        }
        GWElem { terms }
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        GWElem { terms: self.terms.iter().map(|(j, [a, b, c])| (*j, [a * n, b * n, c * n])).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = GWElem::mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = GWElem::mul(&base, &base);
            }
        }
        result
    }

    /// Multiply by `gamma^k`.
    pub fn shift_gamma(&self, k: i64) -> Self {
        GWElem { terms: self.terms.iter().map(|(j, t)| (j + k, t.clone())).collect() }
    }

    /// Degrees present: `4j` for the `1, eps` part, `4j + 2` for the `tau` part.
    pub fn degrees(&self) -> Vec<i64> {
        let mut ds = Vec::new();
        for (&j, [a, b, c]) in &self.terms {
            if !a.is_zero() || !b.is_zero() {
                ds.push(4 * j);
            }
            if !c.is_zero() {
                ds.push(4 * j + 2);
            }
        }
        ds
    }

    pub fn grading(&self) -> Grading {
        let ds = self.degrees();
        match ds.as_slice() {
            [] => Grading::Zero,
            [d] => Grading::Homogeneous(*d),
            _ => Grading::Inhomogeneous,
        }
    }

    /// Degree of a homogeneous element (zero counts as degree 0).
    pub fn degree(&self) -> Result<i64> {
        match self.grading() {
            Grading::Zero => Ok(0),
            Grading::Homogeneous(d) => Ok(d),
            Grading::Inhomogeneous => Err(Error::Grading),
        }
    }

    /// Split into homogeneous components keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<i64, GWElem> {
        let mut out: BTreeMap<i64, GWElem> = BTreeMap::new();
        for (&j, [a, b, c]) in &self.terms {
            if !a.is_zero() || !b.is_zero() {
                out.insert(4 * j, Self::basis(j, [a.clone(), b.clone(), BigInt::zero()]));
            }
            if !c.is_zero() {
                out.insert(4 * j + 2, Self::basis(j, [BigInt::zero(), BigInt::zero(), c.clone()]));
            }
        }
        out
    }

    /// The rank homomorphism (`eps -> -1`, `tau -> 2`, `gamma -> 1`), without a
    /// homogeneity check.
    pub fn rank_formal(&self) -> BigInt {
        self.terms.values().map(|[a, b, c]| a - b + c * 2).sum()
    }

    /// Rank of a homogeneous element.
    pub fn rank(&self) -> Result<BigInt> {
        self.degree()?;
        Ok(self.rank_formal())
    }

    /// Evaluate the ring homomorphism determined by images of `eps`, `tau`,
    /// `gamma` and `gamma^{-1}`. The caller is responsible for the images
    /// satisfying the defining relations.
    pub fn eval<R: RingElem>(&self, eps: &R, tau: &R, gamma: &R, gamma_inv: &R) -> R {
        let mut acc = eps.zero_like();
        for (&j, [a, b, c]) in &self.terms {
            let g = if j >= 0 { gamma.ring_pow(j as u32) } else { gamma_inv.ring_pow((-j) as u32) };
            let mut inner = eps.from_int_like(a);
            inner = inner.ring_add(&eps.ring_mul(&eps.from_int_like(b)));
            inner = inner.ring_add(&tau.ring_mul(&eps.from_int_like(c)));
            acc = acc.ring_add(&inner.ring_mul(&g));
        }
        acc
    }

    /// Context `eps, tau, gamma` (gamma Laurent) used for polynomial interchange.
    pub fn poly_ctx() -> Arc<Ctx> {
        Ctx::new(vec![VarId::poly("eps"), VarId::poly("tau"), VarId::laurent("gamma")]).expect("distinct names")
    }

    /// Normal form as a polynomial in `eps, tau, gamma`.
    pub fn to_zpoly(&self) -> ZPoly {
        let ctx = Self::poly_ctx();
        let terms = self.basis_terms().into_iter().map(|(j, e, t, v)| (vec![e as i32, t as i32, j as i32], v));
        ZPoly::from_terms(&ctx, terms).expect("valid exponents")
    }

    /// Reduce an arbitrary polynomial in `eps, tau, gamma` to normal form.
    pub fn from_zpoly(p: &ZPoly) -> Result<Self> {
        let ctx = p.ctx();
        let idx: Vec<Option<usize>> = ["eps", "tau", "gamma"].iter().map(|n| ctx.index_of(n)).collect();
        for (i, v) in ctx.vars().iter().enumerate() {
            if !idx.contains(&Some(i)) {
                return Err(Error::UnknownVar(v.name.clone()));
            }
        }
        let mut acc = Self::zero();
        for (m, c) in p.terms() {
            let get = |k: usize| idx[k].map(|i| m.exp(i)).unwrap_or(0);
            let (e, t, g) = (get(0), get(1), get(2));
            if e < 0 || t < 0 {
                return Err(Error::Exponent { var: if e < 0 { "eps" } else { "tau" }.into(), exp: e.min(t) as i64 });
            }
            acc = GWElem::add(&acc, &Self::monomial(e as u32, t as u32, g as i64).scale(c));
        }
        Ok(acc)
    }

    /// Signed terms in display order: gamma descending, then `1, eps, tau`.
    fn signed_terms(&self, names: [&str; 3], gamma: impl Fn(i64) -> String, mul: &str) -> Vec<(bool, String, String)> {
        let mut out = Vec::new();
        for (&j, t) in self.terms.iter().rev() {
            for (idx, v) in t.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mut parts: Vec<String> = Vec::new();
                if idx > 0 {
                    parts.push(names[idx].to_string());
                }
                if j != 0 {
                    parts.push(gamma(j));
                }
                let a = v.abs();
                let cs = if a.is_one() { String::new() } else { a.to_string() };
                out.push((v.is_negative(), cs, parts.join(mul)));
            }
        }
        out
    }

    /// ASCII form, e.g. `3*gamma - 6*eps*gamma`.
    pub fn to_text(&self) -> String {
        let t = self.signed_terms(
            ["1", "eps", "tau"],
            |j| if j == 1 { "gamma".into() } else { format!("gamma^{j}") },
            "*",
        );
        join_terms(&t, " + ", " - ", "-", "*")
    }

    /// Unicode form, e.g. `3γ−6εγ`.
    pub fn to_pretty(&self) -> String {
        let t = self.signed_terms(["1", "ε", "τ"], |j| if j == 1 { "γ".into() } else { format!("γ{}", superscript(j)) }, "");
        join_terms(&t, "+", "−", "−", "")
    }

    pub fn to_latex(&self) -> String {
        let t = self.signed_terms(
            ["1", "\\epsilon", "\\tau"],
            |j| if j == 1 { "\\gamma".into() } else { format!("\\gamma^{{{j}}}") },
            " ",
        );
        join_terms(&t, " + ", " - ", "-", " ")
    }

    /// Pretty form wrapped in parentheses when it has several terms.
    pub fn to_pretty_factor(&self) -> String {
        let n: usize = self.terms.values().map(|t| t.iter().filter(|v| !v.is_zero()).count()).sum();
        if n > 1 {
            format!("({})", self.to_pretty())
        } else {
            self.to_pretty()
        }
    }

    pub fn to_json_value(&self) -> GWJson {
        let mut components = Vec::new();
        for (d, part) in self.homogeneous_parts() {
            let (j, [a, b, c]) = part.terms.into_iter().next().expect("nonzero part");
            let arr = |v: BigInt| if v.is_zero() { vec![] } else { vec![v.to_string()] };
            components.push(ComponentJson { deg: d, min_gamma_exp: j, a: arr(a), b: arr(b), c: arr(c) });
        }
        GWJson { components }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json_value(v: &GWJson) -> Result<Self> {
        let mut acc = Self::zero();
        for comp in &v.components {
            for (idx, arr) in [&comp.a, &comp.b, &comp.c].into_iter().enumerate() {
                for (k, s) in arr.iter().enumerate() {
                    let coeff: BigInt = s.trim().parse().map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?;
                    let j = comp.min_gamma_exp + k as i64;
                    let deg = 4 * j + if idx == 2 { 2 } else { 0 };
                    if !coeff.is_zero() && deg != comp.deg {
                        return Err(Error::Parse(format!("term of degree {deg} inside component of degree {}", comp.deg)));
                    }
                    let mut t = zero_triple();
                    t[idx] = coeff;
                    acc = GWElem::add(&acc, &Self::basis(j, t));
                }
            }
        }
        Ok(acc)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: GWJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

/// `{"components":[{"deg","min_gamma_exp","a","b","c"}]}`; the arrays are
/// Laurent coefficient lists in gamma starting at `min_gamma_exp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GWJson {
    pub components: Vec<ComponentJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub deg: i64,
    pub min_gamma_exp: i64,
    #[serde(default)]
    pub a: Vec<String>,
    #[serde(default)]
    pub b: Vec<String>,
    #[serde(default)]
    pub c: Vec<String>,
}

impl fmt::Debug for GWElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GWElem({})", self.to_text())
    }
}

impl fmt::Display for GWElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<'a> Add<&'a GWElem> for &'a GWElem {
    type Output = GWElem;
    fn add(self, rhs: &GWElem) -> GWElem {
        GWElem::add(self, rhs)
    }
}

impl<'a> Sub<&'a GWElem> for &'a GWElem {
    type Output = GWElem;
    fn sub(self, rhs: &GWElem) -> GWElem {
        GWElem::sub(self, rhs)
    }
}

impl<'a> Mul<&'a GWElem> for &'a GWElem {
    type Output = GWElem;
    fn mul(self, rhs: &GWElem) -> GWElem {
        GWElem::mul(self, rhs)
    }
}

impl Add for GWElem {
    type Output = GWElem;
    fn add(self, rhs: GWElem) -> GWElem {
        GWElem::add(&self, &rhs)
    }
}

impl Sub for GWElem {
    type Output = GWElem;
    fn sub(self, rhs: GWElem) -> GWElem {
        GWElem::sub(&self, &rhs)
    }
}

impl Mul for GWElem {
    type Output = GWElem;
    fn mul(self, rhs: GWElem) -> GWElem {
        GWElem::mul(&self, &rhs)
    }
}

impl Neg for &GWElem {
    type Output = GWElem;
    fn neg(self) -> GWElem {
        GWElem::neg(self)
    }
}

impl Neg for GWElem {
    type Output = GWElem;
    fn neg(self) -> GWElem {
        GWElem::neg(&self)
    }
}

impl From<i64> for GWElem {
    fn from(n: i64) -> Self {
        GWElem::from_int(n)
    }
}

impl RingElem for GWElem {
    fn zero_like(&self) -> Self {
        GWElem::zero()
    }
    fn one_like(&self) -> Self {
        GWElem::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        GWElem::add(self, rhs)
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        GWElem::sub(self, rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        GWElem::mul(self, rhs)
    }
    fn ring_neg(&self) -> Self {
        GWElem::neg(self)
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        GWElem::from_bigint(n.clone())
    }
    fn ring_pow(&self, e: u32) -> Self {
        self.pow(e)
    }
}

/// Distinguished constants of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedConstant {
    H,
    Eps,
    MinusOne,
    Tau,
    Gamma,
    NStar(u64),
    Hyperbolic(i64),
    Omega(u64),
}

impl NamedConstant {
    pub fn value(self) -> GWElem {
        match self {
            NamedConstant::H => GWElem::h(),
            NamedConstant::Eps => GWElem::eps(),
            NamedConstant::MinusOne => GWElem::minus_one(),
            NamedConstant::Tau => GWElem::tau(),
            NamedConstant::Gamma => GWElem::gamma(),
            NamedConstant::NStar(n) => GWElem::n_star(n),
            NamedConstant::Hyperbolic(i) => GWElem::hyperbolic_unit(i),
            NamedConstant::Omega(n) => crate::borel::omega(n),
        }
    }
}

impl FromStr for NamedConstant {
    type Err = Error;

    /// `h`, `eps`, `<-1>`, `tau`, `gamma`, `nstar:N`, `h2i:I`, `omega:N`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown constant `{s}`"));
        let s = s.trim();
        Ok(match s {
            "h" => NamedConstant::H,
            "eps" | "ε" => NamedConstant::Eps,
            "<-1>" | "minus_one" | "⟨−1⟩" => NamedConstant::MinusOne,
            "tau" | "τ" => NamedConstant::Tau,
            "gamma" | "γ" => NamedConstant::Gamma,
            _ => {
                let (name, arg) = s.split_once(':').ok_or_else(bad)?;
                match name {
                    "nstar" => NamedConstant::NStar(arg.parse().map_err(|_| bad())?),
                    "h2i" => NamedConstant::Hyperbolic(arg.parse().map_err(|_| bad())?),
                    "omega" => NamedConstant::Omega(arg.parse().map_err(|_| bad())?),
                    _ => return Err(bad()),
                }
            }
        })
    }
}

fn cmp_entry(lemma: &str, params: Vec<crate::report::Param>, lhs: &GWElem, rhs: &GWElem) -> Entry {
    Entry::new(lemma, params, lhs == rhs, lhs.to_text(), rhs.to_text())
}

/// Identities of the coefficient ring for `|i|, |j| <= range`, `m, n <= star_max`
/// and localization witnesses for `n <= witness_max`.
pub fn check_coefficient_identities(range: i64, star_max: u64, witness_max: u64) -> VerificationReport {
    let mut r = VerificationReport::new("coefficient-ring");
    let (h, tau, eps) = (GWElem::h(), GWElem::tau(), GWElem::eps());
    let two = BigInt::from(2);
    r.push(cmp_entry("tau_sq", params!["h*h"], &(&h * &h), &h.scale(&two)));
    r.push(cmp_entry("tau_sq", params!["h*tau"], &(&h * &tau), &tau.scale(&two)));
    r.push(cmp_entry("tau_sq", params!["tau*tau"], &(&tau * &tau), &(&GWElem::gamma() * &h).scale(&two)));
    let one_plus_eps = &GWElem::one() + &eps;
    let b_samples = [
        GWElem::one(),
        eps.clone(),
        GWElem::minus_one(),
        tau.clone(),
        GWElem::gamma(),
        GWElem::gamma_pow(-1),
        GWElem::from_parts(1, 0, 1, 0),
        GWElem::from_parts(-1, 0, 0, 1),
        h.clone(),
    ];
    for i in -range..=range {
        let hi = GWElem::hyperbolic_unit(i);
        r.push(cmp_entry("two_sigma_h", params![i], &(&one_plus_eps * &hi), &GWElem::zero()));
        r.push(cmp_entry("h_periodic", params![i], &(&GWElem::gamma() * &hi), &GWElem::hyperbolic_unit(i + 2)));
        r.push(Entry::new(
            "rank_h",
            params![i],
            hi.rank().ok() == Some(two.clone()),
            hi.rank().map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()),
            "2",
        ));
        for j in -range..=range {
            let lhs = &hi * &GWElem::hyperbolic_unit(j);
            r.push(cmp_entry("product_h", params![i, j], &lhs, &GWElem::hyperbolic_unit(i + j).scale(&two)));
        }
        // h_{2i}(1) * b = h_{2(i+j)}(rank b) for b of degree 2j
        for (s, b) in b_samples.iter().enumerate() {
            let d = b.degree().expect("homogeneous sample") / 2;
            let rhs = GWElem::hyperbolic_unit(i + d).scale(&b.rank_formal());
            r.push(cmp_entry("proj_h", params![i, s], &(&hi * b), &rhs));
        }
    }
    for m in 1..=star_max {
        for n in 1..=star_max {
            let lhs = GWElem::n_star(m * n);
            r.push(cmp_entry("n_star_mult", params![m as i64, n as i64], &lhs, &(&GWElem::n_star(m) * &GWElem::n_star(n))));
        }
    }
    for n in 1..=witness_max {
        let w = crate::borel::omega(n);
        let ni = BigInt::from(n);
        if n % 2 == 1 {
            let m = ((n - 1) / 2) as i64;
            let sign: i64 = if m % 2 == 0 { 1 } else { -1 };
            let factor = &one_plus_eps.scale(&BigInt::from(m)) + &eps.pow(m as u32);
            let rhs = GWElem::gamma_pow(m).scale(&(&ni * &ni * sign));
            r.push(cmp_entry("localization_odd", params![n as i64], &(&w * &factor), &rhs));
        } else {
            let rhs = GWElem::n_star(n).shift_gamma(n as i64 - 1).scale(&ni.pow(3));
            r.push(cmp_entry("omega_sq", params![n as i64], &(&w * &w), &rhs));
        }
    }
    r.finalize()
}

/// Rank values as an `i64` where they fit; convenience for callers and tests.
pub fn rank_i64(x: &GWElem) -> Result<i64> {
    x.rank()?.to_i64().ok_or_else(|| Error::Index("rank does not fit in i64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_word(e: u32, t: u32, g: i64) -> GWElem {
        let mut x = GWElem::gamma_pow(g);
        for _ in 0..e {
            x = &x * &GWElem::eps();
        }
        for _ in 0..t {
            x = &x * &GWElem::tau();
        }
        x
    }

    #[test]
    fn defining_relations() {
        let (e, t, g) = (GWElem::eps(), GWElem::tau(), GWElem::gamma());
        assert!((&e * &e).is_one());
        assert_eq!(&e * &t, -&t);
        assert_eq!((&t * &t).to_text(), "2*gamma - 2*eps*gamma");
        assert!((&g * &GWElem::gamma_pow(-1)).is_one());
        assert!((&(&GWElem::one() + &e) * &t).is_zero());
    }

    #[test]
    fn monomial_closed_form_matches_products() {
        for e in 0..4 {
            for t in 0..9 {
                for g in -2..3 {
                    assert_eq!(GWElem::monomial(e, t, g), naive_word(e, t, g), "eps^{e} tau^{t} gamma^{g}");
                }
            }
        }
    }

    #[test]
    fn constants() {
        assert_eq!(GWElem::hyperbolic_unit(0), GWElem::h());
        assert_eq!(GWElem::hyperbolic_unit(1), GWElem::tau());
        assert_eq!(GWElem::hyperbolic_unit(3).to_text(), "tau*gamma");
        assert_eq!(GWElem::hyperbolic_unit(-1).to_text(), "tau*gamma^-1");
        assert_eq!(GWElem::hyperbolic_unit(-2).to_text(), "gamma^-1 - eps*gamma^-1");
        assert_eq!(GWElem::n_star(3), GWElem::from_int(3));
        assert_eq!(GWElem::n_star(4), GWElem::h().scale(&2.into()));
        assert_eq!(GWElem::n_star(6), &GWElem::n_star(2) * &GWElem::n_star(3));
        assert_eq!(GWElem::minus_one(), -GWElem::eps());
    }

    #[test]
    fn ring_examples() {
        let h = GWElem::h();
        assert_eq!(&h * &h, h.scale(&2.into()));
        assert_eq!(h.rank().unwrap(), 2.into());
        assert_eq!((&GWElem::tau() * &GWElem::tau()).rank().unwrap(), 4.into());
        assert_eq!(GWElem::eps().rank().unwrap(), (-1).into());
        assert_eq!((&GWElem::one() + &GWElem::tau()).rank(), Err(Error::Grading));
    }

    #[test]
    fn grading() {
        assert_eq!(GWElem::tau().grading(), Grading::Homogeneous(2));
        assert_eq!(GWElem::from_parts(1, 3, -6, 0).grading(), Grading::Homogeneous(4));
        assert_eq!(GWElem::zero().grading(), Grading::Zero);
        assert_eq!((&GWElem::one() + &GWElem::tau()).grading(), Grading::Inhomogeneous);
        let x = &GWElem::tau() * &GWElem::from_parts(-1, 0, 0, 1);
        assert_eq!(x.grading(), Grading::Homogeneous(0));
    }

    #[test]
    fn rendering() {
        let x = GWElem::from_parts(1, 3, -6, 0);
        assert_eq!(x.to_text(), "3*gamma - 6*eps*gamma");
        assert_eq!(x.to_pretty(), "3γ−6εγ");
        assert_eq!(x.to_latex(), "3 \\gamma - 6 \\epsilon \\gamma");
        assert_eq!(GWElem::from_parts(1, 0, -2, 0).to_text(), "-2*eps*gamma");
        assert_eq!(GWElem::from_parts(1, 0, 0, 8).to_text(), "8*tau*gamma");
        assert_eq!(GWElem::zero().to_text(), "0");
        assert_eq!(GWElem::h().to_pretty_factor(), "(1−ε)");
        assert_eq!(GWElem::from_parts(-1, 0, 0, 1).to_pretty(), "τγ⁻¹");
    }

    #[test]
    fn json_round_trip() {
        let x = &GWElem::from_parts(1, 3, -6, 0) + &GWElem::from_parts(-2, 0, 0, 5);
        let s = x.to_json();
        assert_eq!(GWElem::from_json(&s).unwrap(), x);
        assert!(s.contains("\"deg\":4"));
        let bad = r#"{"components":[{"deg":0,"min_gamma_exp":0,"c":["1"]}]}"#;
        assert!(GWElem::from_json(bad).is_err());
    }

    #[test]
    fn zpoly_round_trip() {
        let x = &GWElem::from_parts(2, 1, -3, 4) + &GWElem::from_parts(-1, 0, 0, 7);
        assert_eq!(GWElem::from_zpoly(&x.to_zpoly()).unwrap(), x);
        let ctx = GWElem::poly_ctx();
        let tau2 = ZPoly::term(&ctx, vec![0, 2, 0], 1.into()).unwrap();
        assert_eq!(GWElem::from_zpoly(&tau2).unwrap(), &GWElem::tau() * &GWElem::tau());
    }

    #[test]
    fn named_constants_parse() {
        assert_eq!("h2i:3".parse::<NamedConstant>().unwrap().value().to_text(), "tau*gamma");
        assert_eq!("nstar:4".parse::<NamedConstant>().unwrap().value(), GWElem::from_parts(0, 2, -2, 0));
        assert!("bogus".parse::<NamedConstant>().is_err());
    }
}
