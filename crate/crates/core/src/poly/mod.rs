//! Sparse multivariate Laurent polynomials with exact coefficients.
//!
//! A [`Poly`] lives in a ring context ([`Ctx`]): an ordered list of variables,
//! each flagged as Laurent (negative exponents allowed) or not. Terms are kept
//! in a `BTreeMap` keyed by [`Monomial`], ordered graded-lexicographically by
//! the declared variable order, with zero coefficients never stored.

pub mod json;
pub mod render;
pub mod series;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use series::{RingElem, TruncSeries};

/// Scalar coefficients usable in a [`Poly`].
pub trait Coeff:
    Num + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Coeff for T where
    T: Num + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static
{
}

/// A declared variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarId {
    pub name: String,
    #[serde(rename = "laurent")]
    pub laurent: bool,
}

impl VarId {
    pub fn poly(name: impl Into<String>) -> Self {
        VarId { name: name.into(), laurent: false }
    }

    pub fn laurent(name: impl Into<String>) -> Self {
        VarId { name: name.into(), laurent: true }
    }
}

/// Ring context: the ordered variable list shared by all polynomials of a ring.
#[derive(Debug)]
pub struct Ctx {
    vars: Vec<VarId>,
    index: HashMap<String, usize>,
}

impl PartialEq for Ctx {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for Ctx {}

impl Ctx {
    pub fn new(vars: Vec<VarId>) -> Result<Arc<Ctx>> {
        let mut index = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if index.insert(v.name.clone(), i).is_some() {
                return Err(Error::DuplicateVar(v.name.clone()));
            }
        }
        Ok(Arc::new(Ctx { vars, index }))
    }

    /// Context with only non-Laurent variables.
    pub fn polynomial<S: AsRef<str>>(names: &[S]) -> Result<Arc<Ctx>> {
        Ctx::new(names.iter().map(|n| VarId::poly(n.as_ref())).collect())
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn var(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVar(name.to_string()))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    /// A new context with `extra` appended.
    pub fn extended(&self, extra: &[VarId]) -> Result<Arc<Ctx>> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        Ctx::new(vars)
    }
}

fn same_ctx(a: &Arc<Ctx>, b: &Arc<Ctx>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Dense exponent vector, one entry per context variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exps(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn with_exp(&self, i: usize, e: i32) -> Monomial {
        let mut v = self.0.clone();
        v[i] = e;
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of a weighted-degree query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Homogeneous(i64),
    Inhomogeneous,
}

impl Grading {
    pub fn degree(self) -> Option<i64> {
        match self {
            Grading::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

/// Exact multivariate Laurent polynomial.
#[derive(Clone)]
pub struct Poly<C> {
    ctx: Arc<Ctx>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl<C: Coeff> Debug for Poly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

impl<C: Coeff> Display for Poly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

const PAR_THRESHOLD: usize = 1 << 14;

impl<C: Coeff> Poly<C> {
    pub fn zero(ctx: &Arc<Ctx>) -> Self {
        Poly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Arc<Ctx>) -> Self {
        Self::constant(ctx, C::one())
    }

    pub fn constant(ctx: &Arc<Ctx>, c: C) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx.len()), c);
        }
        p
    }

    pub fn from_i64(ctx: &Arc<Ctx>, n: i64) -> Self {
        Self::constant(ctx, C::from_i64(n).expect("integer coefficient"))
    }

    pub fn var(ctx: &Arc<Ctx>, name: &str) -> Result<Self> {
        let i = ctx.var(name)?;
        Ok(Self::var_at(ctx, i))
    }

    pub fn var_at(ctx: &Arc<Ctx>, i: usize) -> Self {
        let mut e = vec![0; ctx.len()];
        e[i] = 1;
        let mut p = Self::zero(ctx);
        p.terms.insert(Monomial(e), C::one());
        p
    }

    /// Single term `c * x^exps`; validates exponent signs.
    pub fn term(ctx: &Arc<Ctx>, exps: Vec<i32>, c: C) -> Result<Self> {
        Self::from_terms(ctx, std::iter::once((exps, c)))
    }

    pub fn from_terms<I>(ctx: &Arc<Ctx>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
    {
        let mut p = Self::zero(ctx);
        for (exps, c) in terms {
            if exps.len() != ctx.len() {
                return Err(Error::Context);
            }
            let m = Monomial(exps);
            check_monomial(ctx, &m)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ctx(&self) -> &Arc<Ctx> {
        &self.ctx
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one(self.ctx.len()))
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Re-insert every term; the identity on canonical values.
    pub fn renormalized(&self) -> Self {
        let mut p = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if !same_ctx(&self.ctx, &rhs.ctx) {
            return Err(Error::Context);
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        if !same_ctx(&self.ctx, &rhs.ctx) {
            return Err(Error::Context);
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if !same_ctx(&self.ctx, &rhs.ctx) {
            return Err(Error::Context);
        }
        let out = self.mul_unchecked(rhs);
        for m in out.terms.keys() {
            check_monomial(&self.ctx, m)?;
        }
        Ok(out)
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.ctx);
        }
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let work = small.len() * large.len();
        let acc: HashMap<Monomial, C> = if work >= PAR_THRESHOLD && small.len() > 1 {
            // exact sums, so the merge order cannot change the result
            let lhs: Vec<(&Monomial, &C)> = small.terms.iter().collect();
            let partials: Vec<HashMap<Monomial, C>> = lhs
                .par_chunks(std::cmp::max(1, lhs.len() / rayon::current_num_threads().max(1)))
                .map(|chunk| {
                    let mut acc = HashMap::new();
                    for &(m1, c1) in chunk {
                        accumulate(&mut acc, m1, c1, &large.terms);
                    }
                    acc
                })
                .collect();
            let mut iter = partials.into_iter();
            let mut acc = iter.next().unwrap_or_default();
            for part in iter {
                for (m, c) in part {
                    match acc.get_mut(&m) {
                        Some(v) => *v = v.clone() + c,
                        None => {
                            acc.insert(m, c);
                        }
                    }
                }
            }
            acc
        } else {
            let mut acc = HashMap::with_capacity(work.min(1 << 16));
            for (m1, c1) in &small.terms {
                accumulate(&mut acc, m1, c1, &large.terms);
            }
            acc
        };
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Poly { ctx: self.ctx.clone(), terms }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiply by a monomial with coefficient one.
    pub fn shift(&self, m: &Monomial) -> Result<Self> {
        let mut out = Self::zero(&self.ctx);
        for (k, v) in &self.terms {
            let km = k.mul(m);
            check_monomial(&self.ctx, &km)?;
            out.terms.insert(km, v.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// If `self` is a single term with coefficient ±1, its inverse.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if !(c.is_one() || (-c.clone()).is_one()) {
            return None;
        }
        let inv = m.inverse();
        if check_monomial(&self.ctx, &inv).is_err() {
            return None;
        }
        let mut p = Self::zero(&self.ctx);
        p.terms.insert(inv, c.clone());
        Some(p)
    }

    /// Maximal exponent of variable `i` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, i: usize) -> i32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, i: usize) -> i32 {
        self.terms.keys().map(|m| m.exp(i)).min().unwrap_or(0)
    }

    /// Weighted degree of the terms, `weights` parallel to the context.
    pub fn graded_degree(&self, weights: &[i64]) -> Grading {
        let mut deg = None;
        for m in self.terms.keys() {
            let d: i64 = m.exps().iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return Grading::Inhomogeneous,
                _ => {}
            }
        }
        deg.map(Grading::Homogeneous).unwrap_or(Grading::Zero)
    }

    /// Weighted degree with weights given by variable name (absent names weigh 0).
    pub fn graded_degree_by_name(&self, weights: &BTreeMap<String, i64>) -> Grading {
        let w: Vec<i64> = self
            .ctx
            .vars()
            .iter()
            .map(|v| weights.get(&v.name).copied().unwrap_or(0))
            .collect();
        self.graded_degree(&w)
    }

    /// Split by the weighted degree of each term.
    pub fn homogeneous_parts(&self, weights: &[i64]) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d: i64 = m.exps().iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
            out.entry(d)
                .or_insert_with(|| Self::zero(&self.ctx))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Move the polynomial into another context by variable name.
    ///
    /// Variables of `self` that occur with a nonzero exponent must exist in `target`.
    pub fn reindex(&self, target: &Arc<Ctx>) -> Result<Self> {
        if same_ctx(&self.ctx, target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> =
            self.ctx.vars().iter().map(|v| target.index_of(&v.name)).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exps().iter().enumerate() {
                if x != 0 {
                    match map[i] {
                        Some(j) => e[j] = x,
                        None => return Err(Error::UnknownVar(self.ctx.name(i).to_string())),
                    }
                }
            }
            let m = Monomial(e);
            check_monomial(target, &m)?;
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    /// Image under the evaluation homomorphism sending bound variables to the
    /// given polynomials (all in `target`) and every other variable to the
    /// same-named variable of `target`.
    pub fn substitute(&self, bindings: &BTreeMap<String, Poly<C>>, target: &Arc<Ctx>) -> Result<Self> {
        let n = self.ctx.len();
        let mut images: Vec<Poly<C>> = Vec::with_capacity(n);
        for v in self.ctx.vars() {
            match bindings.get(&v.name) {
                Some(p) => {
                    if !same_ctx(p.ctx(), target) {
                        return Err(Error::Context);
                    }
                    images.push(p.clone());
                }
                None => images.push(match target.index_of(&v.name) {
                    Some(j) => Poly::var_at(target, j),
                    None => Poly::zero(target),
                }),
            }
        }
        // variables without an image in `target` may only appear with exponent 0
        let unbound_missing: Vec<bool> = self
            .ctx
            .vars()
            .iter()
            .map(|v| !bindings.contains_key(&v.name) && target.index_of(&v.name).is_none())
            .collect();
        let mut powers: HashMap<(usize, i32), Poly<C>> = HashMap::new();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if unbound_missing[i] {
                    return Err(Error::UnknownVar(self.ctx.name(i).to_string()));
                }
                let pw = match powers.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = if e > 0 {
                            images[i].pow(e as u32)
                        } else {
                            let inv = images[i]
                                .unit_inverse()
                                .ok_or_else(|| Error::Substitution(self.ctx.name(i).to_string()))?;
                            inv.pow((-e) as u32)
                        };
                        powers.insert((i, e), p.clone());
                        p
                    }
                };
                t = t.mul_unchecked(&pw);
                if t.is_zero() {
                    break;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Substitute within the same context.
    pub fn substitute_vars(&self, bindings: &BTreeMap<String, Poly<C>>) -> Result<Self> {
        self.substitute(bindings, &self.ctx.clone())
    }

    /// Evaluate in an arbitrary ring: `values` parallel to the context.
    /// Negative exponents are rejected.
    pub fn eval_with<R: RingElem>(&self, values: &[R], unit: &R, coeff: impl Fn(&C) -> R) -> Result<R> {
        let mut powers: HashMap<(usize, i32), R> = HashMap::new();
        let mut acc = unit.zero_like();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e < 0 {
                    return Err(Error::Exponent { var: self.ctx.name(i).to_string(), exp: e as i64 });
                }
                if !powers.contains_key(&(i, e)) {
                    let mut p = values[i].clone();
                    for _ in 1..e {
                        p = p.ring_mul(&values[i]);
                    }
                    powers.insert((i, e), p);
                }
                t = t.ring_mul(&powers[&(i, e)]);
                if t.is_zero_elem() {
                    break;
                }
            }
            acc = acc.ring_add(&t);
        }
        Ok(acc)
    }

    /// Apply `f` to every coefficient (dropping zeros).
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Coefficient of `x_i^e` as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, i: usize, e: i32) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            if m.exp(i) == e {
                out.terms.insert(m.with_exp(i, 0), c.clone());
            }
        }
        out
    }

    /// Swap two variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.swap(i, j);
            out.terms.insert(Monomial(e), c.clone());
        }
        out
    }
}

fn accumulate<C: Coeff>(
    acc: &mut HashMap<Monomial, C>,
    m1: &Monomial,
    c1: &C,
    rhs: &BTreeMap<Monomial, C>,
) {
    for (m2, c2) in rhs {
        let m = m1.mul(m2);
        let prod = c1.clone() * c2.clone();
        match acc.get_mut(&m) {
            Some(v) => *v = v.clone() + prod,
            None => {
                acc.insert(m, prod);
            }
        }
    }
}

fn check_monomial(ctx: &Ctx, m: &Monomial) -> Result<()> {
    for (i, &e) in m.exps().iter().enumerate() {
        if e < 0 && !ctx.vars[i].laurent {
            return Err(Error::Exponent { var: ctx.vars[i].name.clone(), exp: e as i64 });
        }
    }
    Ok(())
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Poly<C>) -> Poly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coeff> RingElem for Poly<C> {
    fn zero_like(&self) -> Self {
        Poly::zero(&self.ctx)
    }
    fn one_like(&self) -> Self {
        Poly::one(&self.ctx)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        let c = C::from_i64(n.to_i64().expect("small integer")).expect("integer coefficient");
        Poly::constant(&self.ctx, c)
    }
}

/// Integer-coefficient polynomial.
pub type ZPoly = Poly<BigInt>;

impl ZPoly {
    /// Evaluate in a ring whose elements can be built from integers.
    pub fn eval_ring<R: RingElem>(&self, values: &[R], unit: &R) -> Result<R> {
        self.eval_with(values, unit, |c| unit.from_int_like(c))
    }
}

/// Convert a string of decimal digits into a coefficient.
pub fn parse_coeff<C: Coeff>(s: &str) -> Result<C> {
    C::from_str_radix(s.trim(), 10).map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx_xy() -> Arc<Ctx> {
        Ctx::polynomial(&["x", "y"]).unwrap()
    }

    fn x(ctx: &Arc<Ctx>) -> ZPoly {
        ZPoly::var(ctx, "x").unwrap()
    }

    fn y(ctx: &Arc<Ctx>) -> ZPoly {
        ZPoly::var(ctx, "y").unwrap()
    }

    #[test]
    fn add_examples() {
        let c = ctx_xy();
        assert!((&x(&c) + &(-x(&c))).is_zero());
        let lhs = &(&x(&c) + &y(&c)) + &y(&c);
        let rhs = &x(&c) + &y(&c).scale(&2.into());
        assert_eq!(lhs, rhs);
        let x2m1 = &x(&c).pow(2) - &ZPoly::one(&c);
        assert_eq!(&x2m1 + &ZPoly::one(&c), x(&c).pow(2));
    }

    #[test]
    fn mul_examples() {
        let c = ctx_xy();
        let p = &(&x(&c) + &y(&c)) * &(&x(&c) - &y(&c));
        assert_eq!(p, &x(&c).pow(2) - &y(&c).pow(2));

        let g = Ctx::new(vec![VarId::laurent("gamma")]).unwrap();
        let gamma = ZPoly::var(&g, "gamma").unwrap();
        let ginv = gamma.unit_inverse().unwrap();
        assert!((&gamma * &ginv).is_one());
    }

    #[test]
    fn negative_exponent_rejected_on_polynomial_var() {
        let c = ctx_xy();
        let err = ZPoly::term(&c, vec![-1, 0], 1.into()).unwrap_err();
        assert!(matches!(err, Error::Exponent { .. }));
    }

    #[test]
    fn context_mismatch() {
        let a = ctx_xy();
        let b = Ctx::polynomial(&["x", "z"]).unwrap();
        let err = x(&a).checked_add(&ZPoly::var(&b, "x").unwrap()).unwrap_err();
        assert_eq!(err, Error::Context);
    }

    #[test]
    fn substitution_examples() {
        let c = Ctx::new(vec![VarId::poly("x"), VarId::laurent("a")]).unwrap();
        let a = ZPoly::var(&c, "a").unwrap();
        let ainv = a.unit_inverse().unwrap();
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), &a + &ainv);
        let img = x(&c).pow(2).substitute_vars(&b).unwrap();
        let expected = &(&a.pow(2) + &ZPoly::from_i64(&c, 2)) + &ainv.pow(2);
        assert_eq!(img, expected);

        let mut b0 = BTreeMap::new();
        b0.insert("x".to_string(), ZPoly::zero(&c));
        let one_plus_x = &ZPoly::one(&c) + &x(&c);
        assert!(one_plus_x.substitute_vars(&b0).unwrap().is_one());
    }

    #[test]
    fn substitution_into_laurent_needs_unit() {
        let c = Ctx::new(vec![VarId::poly("x"), VarId::laurent("a")]).unwrap();
        let a = ZPoly::var(&c, "a").unwrap();
        let p = a.unit_inverse().unwrap();
        let mut b = BTreeMap::new();
        b.insert("a".to_string(), &a + &ZPoly::one(&c));
        assert!(matches!(p.substitute_vars(&b), Err(Error::Substitution(_))));
        let mut b2 = BTreeMap::new();
        b2.insert("a".to_string(), a.pow(2).scale(&(-1).into()));
        let img = p.substitute_vars(&b2).unwrap();
        assert_eq!(img, a.pow(2).unit_inverse().unwrap().scale(&(-1).into()));
    }

    #[test]
    fn graded_degree_examples() {
        let c = Ctx::new(vec![VarId::poly("tau"), VarId::laurent("gamma"), VarId::poly("u1"), VarId::poly("u2"), VarId::poly("u3")]).unwrap();
        let w = [2, 4, 2, 2, 2];
        let t2g = ZPoly::term(&c, vec![2, -1, 0, 0, 0], 1.into()).unwrap();
        assert_eq!(t2g.graded_degree(&w), Grading::Homogeneous(0));
        let b1 = ZPoly::term(&c, vec![0, -1, 1, 1, 1], 1.into()).unwrap();
        assert_eq!(b1.graded_degree(&w), Grading::Homogeneous(2));
        let p = &ZPoly::one(&c) + &ZPoly::var(&c, "tau").unwrap();
        assert_eq!(p.graded_degree(&w), Grading::Inhomogeneous);
        assert_eq!(ZPoly::zero(&c).graded_degree(&w), Grading::Zero);
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial::from_exps(vec![2, 0]);
        let b = Monomial::from_exps(vec![1, 1]);
        let c = Monomial::from_exps(vec![0, 3]);
        assert!(a > b);
        assert!(c > a);
        assert_eq!(a.cmp(&a), Ordering::Equal);
    }

    #[test]
    fn generic_over_rational_coefficients() {
        use num_rational::BigRational;
        let c = ctx_xy();
        let half = BigRational::new(1.into(), 2.into());
        let p = Poly::<BigRational>::var(&c, "x").unwrap().scale(&half);
        let q = &p + &p;
        assert_eq!(q, Poly::<BigRational>::var(&c, "x").unwrap());
        let small = Poly::<i64>::var(&c, "y").unwrap().pow(3);
        assert_eq!(small.len(), 1);
    }
}
