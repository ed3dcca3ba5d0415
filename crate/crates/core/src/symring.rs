//! The coefficient ring extended by free degree-2 generators `u_1, ..., u_k`
//! (classes of rank-2 symplectic bundles), optionally modulo `(u_i - tau)^2`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gw::{ComponentJson, GWElem, GWJson};
use crate::poly::render::{join_terms, latex_name, superscript};
use crate::poly::{Grading, RingElem, ZPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymRing {
    pub k: usize,
    /// Impose `(u_i - tau)^2 = 0` for every generator.
    pub quotient: bool,
    /// Generator names are `prefix1, ..., prefixk`.
    pub prefix: String,
}

impl SymRing {
    pub fn new(k: usize, prefix: &str) -> Arc<SymRing> {
        Arc::new(SymRing { k, quotient: false, prefix: prefix.to_string() })
    }

    pub fn quotient(k: usize, prefix: &str) -> Arc<SymRing> {
        Arc::new(SymRing { k, quotient: true, prefix: prefix.to_string() })
    }

    /// The coefficient ring itself (no generators).
    pub fn base() -> Arc<SymRing> {
        Self::new(0, "u")
    }

    pub fn names(&self) -> Vec<String> {
        (1..=self.k).map(|i| format!("{}{i}", self.prefix)).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymClass {
    ring: Arc<SymRing>,
    /// u-exponent vector -> coefficient; no zero coefficients.
    terms: BTreeMap<Vec<u32>, GWElem>,
}

/// `u^e = e tau^{e-1} u - (e-1) tau^e` modulo `(u - tau)^2`, as `(constant, linear)`.
fn reduced_power(e: u32) -> (GWElem, GWElem) {
    let tau = GWElem::tau();
    let lin = tau.pow(e - 1).scale(&BigInt::from(e));
    let con = tau.pow(e).scale(&BigInt::from(1 - e as i64));
    (con, lin)
}

impl SymClass {
    pub fn zero(ring: &Arc<SymRing>) -> Self {
        SymClass { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<SymRing>) -> Self {
        Self::constant(ring, GWElem::one())
    }

    pub fn constant(ring: &Arc<SymRing>, c: GWElem) -> Self {
        let mut s = Self::zero(ring);
        if !c.is_zero() {
            s.terms.insert(vec![0; ring.k], c);
        }
        s
    }

    pub fn from_int(ring: &Arc<SymRing>, n: i64) -> Self {
        Self::constant(ring, GWElem::from_int(n))
    }

    /// The generator `u_{i+1}` (zero-based index).
    pub fn generator(ring: &Arc<SymRing>, i: usize) -> Result<Self> {
        if i >= ring.k {
            return Err(Error::Index(format!("generator {} of {}", i + 1, ring.k)));
        }
        let mut e = vec![0; ring.k];
        e[i] = 1;
        Self::from_terms(ring, [(e, GWElem::one())])
    }

    /// `c * u^exps`.
    pub fn term(ring: &Arc<SymRing>, exps: Vec<u32>, c: GWElem) -> Result<Self> {
        Self::from_terms(ring, [(exps, c)])
    }

    pub fn from_terms(ring: &Arc<SymRing>, terms: impl IntoIterator<Item = (Vec<u32>, GWElem)>) -> Result<Self> {
        let mut raw: BTreeMap<Vec<u32>, GWElem> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != ring.k {
                return Err(Error::Index(format!("exponent vector of length {} for {} generators", e.len(), ring.k)));
            }
            add_term(&mut raw, e, c);
        }
        Ok(Self::reduced(ring, raw))
    }

    fn reduced(ring: &Arc<SymRing>, raw: BTreeMap<Vec<u32>, GWElem>) -> Self {
        if !ring.quotient || raw.keys().all(|e| e.iter().all(|&x| x <= 1)) {
            return SymClass { ring: ring.clone(), terms: raw };
        }
        let mut out = BTreeMap::new();
        for (e, c) in raw {
            // expand prod_i (con_i + lin_i u_i) over the generators with exponent >= 2
            let mut partial: Vec<(Vec<u32>, GWElem)> = vec![(vec![0; ring.k], c)];
            for (i, &x) in e.iter().enumerate() {
                if x <= 1 {
                    for p in partial.iter_mut() {
                        p.0[i] = x;
                    }
                    continue;
                }
                let (con, lin) = reduced_power(x);
                let mut next = Vec::with_capacity(partial.len() * 2);
                for (pe, pc) in partial {
                    next.push((pe.clone(), &pc * &con));
                    let mut le = pe;
                    le[i] = 1;
                    next.push((le, &pc * &lin));
                }
                partial = next;
            }
            for (pe, pc) in partial {
                add_term(&mut out, pe, pc);
            }
        }
        SymClass { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Arc<SymRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &GWElem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, exps: &[u32]) -> GWElem {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// The coefficient-ring part if no generator occurs.
    pub fn as_constant(&self) -> Option<GWElem> {
        match self.terms.len() {
            0 => Some(GWElem::zero()),
            1 => self.terms.get(&vec![0; self.ring.k]).cloned(),
            _ => None,
        }
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.ring, rhs.ring, "SymClass ring mismatch");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            add_term(&mut terms, e.clone(), c.clone());
        }
        SymClass { ring: self.ring.clone(), terms }
    }

    pub fn neg(&self) -> Self {
        SymClass { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let mut raw = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                add_term(&mut raw, e, c1 * c2);
            }
        }
        Self::reduced(&self.ring, raw)
    }

    pub fn scale(&self, c: &GWElem) -> Self {
        let mut terms = BTreeMap::new();
        for (e, x) in &self.terms {
            add_term(&mut terms, e.clone(), x * c);
        }
        SymClass { ring: self.ring.clone(), terms }
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        self.scale(&GWElem::from_bigint(n.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(&self.ring);
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&GWElem) -> GWElem) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            add_term(&mut terms, e.clone(), f(c));
        }
        Self::reduced(&self.ring, terms)
    }

    /// Degrees present (`deg u_i = 2`).
    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self
            .terms
            .iter()
            .flat_map(|(e, c)| {
                let ud: i64 = 2 * e.iter().map(|&x| x as i64).sum::<i64>();
                c.degrees().into_iter().map(move |d| d + ud)
            })
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn grading(&self) -> Grading {
        match self.degrees().as_slice() {
            [] => Grading::Zero,
            [d] => Grading::Homogeneous(*d),
            _ => Grading::Inhomogeneous,
        }
    }

    /// Degree of a homogeneous class (zero counts as degree 0).
    pub fn degree(&self) -> Result<i64> {
        match self.grading() {
            Grading::Zero => Ok(0),
            Grading::Homogeneous(d) => Ok(d),
            Grading::Inhomogeneous => Err(Error::Grading),
        }
    }

    /// Rank with `rank(u_i) = 2`, no homogeneity check.
    pub fn rank_formal(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c.rank_formal() * BigInt::from(2).pow(e.iter().sum::<u32>()))
            .sum()
    }

    pub fn rank(&self) -> Result<BigInt> {
        self.degree()?;
        Ok(self.rank_formal())
    }

    /// Ring homomorphism sending `u_i` to `values[i]` (coefficients fixed).
    pub fn substitute(&self, values: &[SymClass], target: &Arc<SymRing>) -> Result<Self> {
        if values.len() != self.ring.k {
            return Err(Error::Index(format!("{} values for {} generators", values.len(), self.ring.k)));
        }
        let mut powers: BTreeMap<(usize, u32), SymClass> = BTreeMap::new();
        let mut acc = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let p = powers.entry((i, x)).or_insert_with(|| values[i].pow(x)).clone();
                t = t.mul(&p);
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitute `u_i = w_i + shift` with `w_i` the generators of `target`.
    pub fn shift_generators(&self, shift: &GWElem, target: &Arc<SymRing>) -> Result<Self> {
        if target.k != self.ring.k {
            return Err(Error::Index("generator count mismatch".into()));
        }
        let vals: Vec<SymClass> = (0..target.k)
            .map(|i| Ok(Self::generator(target, i)?.add(&Self::constant(target, shift.clone()))))
            .collect::<Result<_>>()?;
        self.substitute(&vals, target)
    }

    /// Permute generators: `u_i -> u_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; e.len()];
            for (i, &x) in e.iter().enumerate() {
                ne[perm[i]] = x;
            }
            terms.insert(ne, c.clone());
        }
        SymClass { ring: self.ring.clone(), terms }
    }

    /// Invariant under every permutation of the generators.
    pub fn is_symmetric(&self) -> bool {
        let k = self.ring.k;
        (0..k.saturating_sub(1)).all(|i| {
            let mut p: Vec<usize> = (0..k).collect();
            p.swap(i, i + 1);
            self.permute(&p) == *self
        })
    }

    /// Evaluate in another ring: generators to `gens`, coefficients through `coeff`.
    pub fn eval_into<R: RingElem>(&self, gens: &[R], unit: &R, coeff: impl Fn(&GWElem) -> R) -> R {
        let mut acc = unit.zero_like();
        for (e, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    t = t.ring_mul(&gens[i].ring_pow(x));
                }
            }
            acc = acc.ring_add(&t);
        }
        acc
    }

    /// Image under `eps, tau, gamma, gamma^{-1} -> images` with coefficients in
    /// an integer Laurent polynomial ring (e.g. `Z[beta^{±1}]`).
    pub fn specialize(&self, images: [&ZPoly; 4]) -> SpecializedClass {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = c.eval(images[0], images[1], images[2], images[3]);
            if !v.is_zero() {
                terms.insert(e.clone(), v);
            }
        }
        SpecializedClass { k: self.ring.k, prefix: self.ring.prefix.clone(), terms }
    }

    /// Reinterpret in a ring with the same generator count (e.g. rename prefix).
    pub fn with_ring(&self, ring: &Arc<SymRing>) -> Result<Self> {
        if ring.k != self.ring.k {
            return Err(Error::Index("generator count mismatch".into()));
        }
        Ok(Self::reduced(ring, self.terms.clone()))
    }

    fn monomial_parts(&self, e: &[u32], style: Style) -> String {
        let names = self.ring.names();
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| style.power(&names[i], x as i64))
            .collect();
        parts.join(style.mul())
    }

    fn render(&self, style: Style) -> String {
        let mut out = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono = self.monomial_parts(e, style);
            for (j, e_eps, e_tau, v) in display_order(c.basis_terms()) {
                let mut parts = Vec::new();
                if !mono.is_empty() {
                    parts.push(mono.clone());
                }
                if e_eps == 1 {
                    parts.push(style.eps().to_string());
                }
                if e_tau == 1 {
                    parts.push(style.tau().to_string());
                }
                if j != 0 {
                    parts.push(style.power(style.gamma(), j));
                }
                let a = v.abs();
                let cs = if a.is_one() { String::new() } else { a.to_string() };
                out.push((v.is_negative(), cs, parts.join(style.mul())));
            }
        }
        join_terms(&out, style.plus(), style.minus(), style.lead_minus(), style.mul())
    }

    /// ASCII form, e.g. `u1*u2 + 2*gamma`.
    pub fn to_text(&self) -> String {
        self.render(Style::Text)
    }

    pub fn to_pretty(&self) -> String {
        self.render(Style::Pretty)
    }

    pub fn to_latex(&self) -> String {
        self.render(Style::Latex)
    }

    /// Orbit-sum notation `c σ(u1^2 u2) + ...`, or `None` if not symmetric.
    pub fn to_orbit_string(&self, style: Style) -> Option<String> {
        if !self.is_symmetric() {
            return None;
        }
        let reps: BTreeMap<Vec<u32>, GWElem> =
            self.terms.iter().filter(|(e, _)| is_partition(e)).map(|(e, c)| (e.clone(), c.clone())).collect();
        Some(render_orbits(self.ring.k, &self.ring.prefix, &reps, style, |c| gw_factor(c, style)))
    }

    pub fn to_json_value(&self) -> SymClassJson {
        SymClassJson {
            generators: self.ring.k,
            quotient: self.ring.quotient,
            prefix: self.ring.prefix.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| SymTermJson { u_exps: e.clone(), components: c.to_json_value().components })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// Accepts the class format or a bare coefficient-ring element.
    pub fn from_json(s: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if v.get("terms").is_none() && v.get("components").is_some() {
            let g = GWElem::from_json(s)?;
            return Ok(Self::constant(&SymRing::base(), g));
        }
        let j: SymClassJson = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        let ring = Arc::new(SymRing { k: j.generators, quotient: j.quotient, prefix: j.prefix.clone() });
        let mut terms = Vec::new();
        for t in j.terms {
            let c = GWElem::from_json_value(&GWJson { components: t.components })?;
            terms.push((t.u_exps, c));
        }
        Self::from_terms(&ring, terms).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn add_term(map: &mut BTreeMap<Vec<u32>, GWElem>, e: Vec<u32>, c: GWElem) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&e) {
        Some(x) => {
            *x = &*x + &c;
            if x.is_zero() {
                map.remove(&e);
            }
        }
        None => {
            map.insert(e, c);
        }
    }
}

/// GW basis terms in display order: gamma descending, then `1, eps, tau`.
fn display_order(mut v: Vec<(i64, u8, u8, BigInt)>) -> Vec<(i64, u8, u8, BigInt)> {
    v.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    v
}

fn is_partition(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

/// Output notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Pretty,
    Latex,
}

impl Style {
    fn mul(self) -> &'static str {
        match self {
            Style::Text => "*",
            Style::Pretty => "",
            Style::Latex => " ",
        }
    }
    fn plus(self) -> &'static str {
        match self {
            Style::Pretty => "+",
            _ => " + ",
        }
    }
    fn minus(self) -> &'static str {
        match self {
            Style::Pretty => "−",
            _ => " - ",
        }
    }
    fn lead_minus(self) -> &'static str {
        match self {
            Style::Pretty => "−",
            _ => "-",
        }
    }
    fn eps(self) -> &'static str {
        match self {
            Style::Text => "eps",
            Style::Pretty => "ε",
            Style::Latex => "\\epsilon",
        }
    }
    fn tau(self) -> &'static str {
        match self {
            Style::Text => "tau",
            Style::Pretty => "τ",
            Style::Latex => "\\tau",
        }
    }
    fn gamma(self) -> &'static str {
        match self {
            Style::Text => "gamma",
            Style::Pretty => "γ",
            Style::Latex => "\\gamma",
        }
    }
    pub(crate) fn power(self, base: &str, e: i64) -> String {
        match (self, e) {
            (_, 1) => match self {
                Style::Latex => latex_name(base),
                _ => base.to_string(),
            },
            (Style::Text, _) => format!("{base}^{e}"),
            (Style::Pretty, _) => format!("{base}{}", superscript(e)),
            (Style::Latex, _) => format!("{}^{{{e}}}", latex_name(base)),
        }
    }
    fn sigma(self, inner: &str) -> String {
        match self {
            Style::Text => format!("sigma({inner})"),
            Style::Pretty => format!("σ({inner})"),
            Style::Latex => format!("\\sigma({inner})"),
        }
    }
}

/// Sign and factor string for a coefficient; the factor is empty for `±1`.
fn gw_factor(c: &GWElem, style: Style) -> (bool, String) {
    let bt = c.basis_terms();
    if bt.len() == 1 {
        let (j, e, t, v) = &bt[0];
        let mut parts = Vec::new();
        let a = v.abs();
        if !a.is_one() {
            parts.push(a.to_string());
        }
        if *e == 1 {
            parts.push(style.eps().into());
        }
        if *t == 1 {
            parts.push(style.tau().into());
        }
        if *j != 0 {
            parts.push(style.power(style.gamma(), *j));
        }
        return (v.is_negative(), parts.join(style.mul()));
    }
    let body = match style {
        Style::Text => c.to_text(),
        Style::Pretty => c.to_pretty(),
        Style::Latex => c.to_latex(),
    };
    (false, format!("({body})"))
}

/// Render `sum_orbits c * σ(rep)` for partition-indexed representatives.
/// Orbits are ordered by total degree, then by descending partition.
pub fn render_orbits<C>(
    k: usize,
    prefix: &str,
    reps: &BTreeMap<Vec<u32>, C>,
    style: Style,
    factor: impl Fn(&C) -> (bool, String),
) -> String {
    let mut keys: Vec<&Vec<u32>> = reps.keys().collect();
    keys.sort_by(|a, b| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then(b.cmp(a))
    });
    let mut terms = Vec::new();
    for e in keys {
        let (neg, f) = factor(&reps[e]);
        let names: Vec<String> = (1..=k).map(|i| format!("{prefix}{i}")).collect();
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| style.power(&names[i], x as i64))
            .collect();
        let mono = mono.join(style.mul());
        let orbit_size_one = e.iter().all(|&x| x == e[0]);
        let m = if mono.is_empty() {
            String::new()
        } else if orbit_size_one {
            mono
        } else {
            style.sigma(&mono)
        };
        terms.push((neg, f, m));
    }
    join_terms(&terms, style.plus(), style.minus(), style.lead_minus(), style.mul())
}

impl fmt::Debug for SymClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymClass[{}{}]({})", self.ring.prefix, self.ring.k, self.to_text())
    }
}

impl fmt::Display for SymClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl RingElem for SymClass {
    fn zero_like(&self) -> Self {
        SymClass::zero(&self.ring)
    }
    fn one_like(&self) -> Self {
        SymClass::one(&self.ring)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        SymClass::constant(&self.ring, GWElem::from_bigint(n.clone()))
    }
    fn ring_pow(&self, e: u32) -> Self {
        self.pow(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymClassJson {
    pub generators: usize,
    #[serde(default)]
    pub quotient: bool,
    #[serde(default = "default_prefix")]
    pub prefix: String,
    pub terms: Vec<SymTermJson>,
}

fn default_prefix() -> String {
    "u".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymTermJson {
    pub u_exps: Vec<u32>,
    pub components: Vec<ComponentJson>,
}

/// A class whose coefficients were pushed into an integer Laurent polynomial
/// ring, e.g. the K-theory image `Z[beta^{±1}][v_1, ..., v_k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializedClass {
    pub k: usize,
    pub prefix: String,
    pub terms: BTreeMap<Vec<u32>, ZPoly>,
}

impl SpecializedClass {
    pub fn from_terms(k: usize, prefix: &str, terms: impl IntoIterator<Item = (Vec<u32>, ZPoly)>) -> Self {
        let mut map: BTreeMap<Vec<u32>, ZPoly> = BTreeMap::new();
        for (e, c) in terms {
            let v = match map.remove(&e) {
                Some(old) => &old + &c,
                None => c,
            };
            if !v.is_zero() {
                map.insert(e, v);
            }
        }
        SpecializedClass { k, prefix: prefix.to_string(), terms: map }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.k.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut s = e.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(c)
            })
        })
    }

    pub fn to_orbit_string(&self, style: Style) -> Option<String> {
        if !self.is_symmetric() {
            return None;
        }
        let reps: BTreeMap<Vec<u32>, ZPoly> =
            self.terms.iter().filter(|(e, _)| is_partition(e)).map(|(e, c)| (e.clone(), c.clone())).collect();
        Some(render_orbits(self.k, &self.prefix, &reps, style, |c| laurent_factor(c, style)))
    }
}

fn laurent_factor(c: &ZPoly, style: Style) -> (bool, String) {
    if c.len() == 1 {
        let (m, v) = c.terms().next().expect("one term");
        let mut parts = Vec::new();
        let a = v.abs();
        if !a.is_one() {
            parts.push(a.to_string());
        }
        for (i, &e) in m.exps().iter().enumerate() {
            if e != 0 {
                let name = match style {
                    Style::Text => c.ctx().name(i).to_string(),
                    Style::Pretty => crate::poly::render::pretty_name(c.ctx().name(i)),
                    Style::Latex => crate::poly::render::latex_name(c.ctx().name(i)),
                };
                parts.push(if e == 1 { name } else { style_power_raw(style, &name, e as i64) });
            }
        }
        return (v.is_negative(), parts.join(style.mul()));
    }
    let body = match style {
        Style::Text => c.to_text(),
        Style::Pretty => c.to_pretty(),
        Style::Latex => c.to_latex(),
    };
    (false, format!("({body})"))
}

fn style_power_raw(style: Style, base: &str, e: i64) -> String {
    match style {
        Style::Text => format!("{base}^{e}"),
        Style::Pretty => format!("{base}{}", superscript(e)),
        Style::Latex => format!("{base}^{{{e}}}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(r: &Arc<SymRing>, i: usize) -> SymClass {
        SymClass::generator(r, i).unwrap()
    }

    #[test]
    fn arithmetic_and_rendering() {
        let r = SymRing::new(2, "u");
        let x = u(&r, 0).mul(&u(&r, 1)).add(&SymClass::constant(&r, GWElem::gamma().scale(&2.into())));
        assert_eq!(x.to_text(), "u1*u2 + 2*gamma");
        assert_eq!(x.to_pretty(), "u1u2+2γ");
        assert_eq!(x.degree().unwrap(), 4);
        assert_eq!(x.rank().unwrap(), 6.into());
        let y = u(&r, 0).add(&SymClass::one(&r));
        assert_eq!(y.degree(), Err(Error::Grading));
    }

    #[test]
    fn quotient_relation() {
        let r = SymRing::quotient(1, "u");
        let w = u(&r, 0).sub(&SymClass::constant(&r, GWElem::tau()));
        assert!(w.mul(&w).is_zero());
        // u^3 = 3 tau^2 u - 2 tau^3
        let u3 = u(&r, 0).pow(3);
        let tau = GWElem::tau();
        let expect = u(&r, 0).scale(&tau.pow(2).scale(&3.into())).sub(&SymClass::constant(&r, tau.pow(3).scale(&2.into())));
        assert_eq!(u3, expect);
    }

    #[test]
    fn shift_and_symmetry() {
        let r = SymRing::new(2, "u");
        let v = SymRing::new(2, "v");
        let x = u(&r, 0).mul(&u(&r, 1));
        let y = x.shift_generators(&-GWElem::tau(), &v).unwrap();
        assert!(y.is_symmetric());
        let back = y.shift_generators(&GWElem::tau(), &r).unwrap();
        assert_eq!(back, x);
        assert!(!u(&r, 0).is_symmetric());
        let s = u(&v, 0).add(&u(&v, 1)).scale(&GWElem::h());
        assert_eq!(s.to_orbit_string(Style::Pretty).unwrap(), "(1−ε)σ(v1)");
    }

    #[test]
    fn json_round_trip() {
        let r = SymRing::quotient(2, "u");
        let x = u(&r, 0).scale(&GWElem::tau()).add(&SymClass::constant(&r, GWElem::from_parts(1, 3, -6, 0)));
        assert_eq!(SymClass::from_json(&x.to_json()).unwrap(), x);
        let g = SymClass::from_json(&GWElem::tau().to_json()).unwrap();
        assert_eq!(g.as_constant(), Some(GWElem::tau()));
    }
}
