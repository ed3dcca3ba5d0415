//! The universal polynomials `P_n`, `Q_{i,j}`, `R_n` and their shared cache.
//!
//! Bounded variants fix the arity of each variable family: `P^{(a,b)}_n` is
//! `P_n` with `X_{>a} = Y_{>b} = 0`, obtained by running the defining product
//! with `a` variables `U` and `b` variables `V`. The lambda engine only ever
//! needs the bounded forms, which keeps high-degree work cheap.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::{family, family_ctx, product_coefficients, symmetric_reduce};
use crate::error::{Error, Result};
use crate::poly::json::PolyJson;
use crate::poly::ZPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UniKind {
    P(usize),
    Q(usize, usize),
    R(usize),
}

impl fmt::Display for UniKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniKind::P(n) => write!(f, "P_{n}"),
            UniKind::Q(i, j) => write!(f, "Q_{{{i},{j}}}"),
            UniKind::R(n) => write!(f, "R_{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct UniversalPoly {
    pub kind: UniKind,
    pub value: ZPoly,
    /// Arity of the variable families used to compute `value`.
    pub arity_used: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RMethod {
    /// Triple symmetric reduction of the defining product.
    Direct,
    /// Substitution of `P_k(Y, Z)` into `P_n`.
    Composed,
}

/// Cache key: each variant pins the exact computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UniKey {
    P { n: usize, a: usize, b: usize },
    Q { i: usize, j: usize, d: usize },
    RDirect { n: usize, m: usize },
    RComposed { n: usize, a: usize, b: usize, c: usize },
}

impl fmt::Display for UniKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            UniKey::P { n, a, b } => write!(f, "P:{n}:{a}:{b}"),
            UniKey::Q { i, j, d } => write!(f, "Q:{i}:{j}:{d}"),
            UniKey::RDirect { n, m } => write!(f, "RD:{n}:{m}"),
            UniKey::RComposed { n, a, b, c } => write!(f, "RC:{n}:{a}:{b}:{c}"),
        }
    }
}

impl std::str::FromStr for UniKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let nums: Vec<usize> = parts[1..]
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| Error::Parse(format!("bad cache key `{s}`"))))
            .collect::<Result<_>>()?;
        match (parts[0], nums.as_slice()) {
            ("P", [n, a, b]) => Ok(UniKey::P { n: *n, a: *a, b: *b }),
            ("Q", [i, j, d]) => Ok(UniKey::Q { i: *i, j: *j, d: *d }),
            ("RD", [n, m]) => Ok(UniKey::RDirect { n: *n, m: *m }),
            ("RC", [n, a, b, c]) => Ok(UniKey::RComposed { n: *n, a: *a, b: *b, c: *c }),
            _ => Err(Error::Parse(format!("bad cache key `{s}`"))),
        }
    }
}

type Store = RwLock<BTreeMap<UniKey, Arc<ZPoly>>>;

fn store() -> &'static Store {
    static CACHE: OnceLock<Store> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}

fn cached(key: UniKey, compute: impl FnOnce() -> ZPoly) -> Arc<ZPoly> {
    if let Some(v) = store().read().expect("cache lock").get(&key) {
        return v.clone();
    }
    // computed outside the lock; racing threads produce identical values
    let v = Arc::new(compute());
    store().write().expect("cache lock").entry(key).or_insert(v).clone()
}

pub fn cache_len() -> usize {
    store().read().expect("cache lock").len()
}

pub fn cache_clear() {
    store().write().expect("cache lock").clear();
}

const CACHE_FORMAT: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: u32,
    tool_version: String,
    entries: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: String,
    poly: PolyJson,
}

/// Merge a cache file into memory. Files from another format or tool version
/// are ignored. Returns the number of entries loaded.
pub fn load_cache(path: &Path) -> Result<usize> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(Error::Parse(e.to_string())),
    };
    let file: CacheFile = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.format != CACHE_FORMAT || file.tool_version != crate::VERSION {
        return Ok(0);
    }
    let mut loaded = Vec::with_capacity(file.entries.len());
    for e in &file.entries {
        let key: UniKey = e.key.parse()?;
        let ctx = crate::poly::Ctx::new(e.poly.vars.clone())?;
        loaded.push((key, ZPoly::from_json_value(&e.poly, &ctx)?));
    }
    let n = loaded.len();
    let mut w = store().write().expect("cache lock");
    for (k, v) in loaded {
        w.entry(k).or_insert_with(|| Arc::new(v));
    }
    Ok(n)
}

/// Write the whole cache; output depends only on the cached content.
pub fn save_cache(path: &Path) -> Result<()> {
    let entries = store()
        .read()
        .expect("cache lock")
        .iter()
        .map(|(k, v)| CacheEntry { key: k.to_string(), poly: v.to_json_value() })
        .collect();
    let file = CacheFile { format: CACHE_FORMAT, tool_version: crate::VERSION.to_string(), entries };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    std::fs::write(path, s).map_err(|e| Error::Parse(e.to_string()))
}

fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(|s| s.as_str()).collect()
}

/// `P^{(a,b)}_n` in the context `X1..Xa, Y1..Yb`, uncached.
pub(crate) fn compute_p(n: usize, a: usize, b: usize) -> ZPoly {
    let ctx = family_ctx(&[("U", a), ("V", b)]);
    let mut factors = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            factors.push(&ZPoly::var_at(&ctx, i) * &ZPoly::var_at(&ctx, a + j));
        }
    }
    let coeff = product_coefficients(&ctx, &factors, n).swap_remove(n);
    let (u, v, x, y) = (family("U", a), family("V", b), family("X", a), family("Y", b));
    let r1 = symmetric_reduce(&coeff, &strs(&u), &strs(&x)).expect("symmetric by construction");
    let r2 = symmetric_reduce(&r1, &strs(&v), &strs(&y)).expect("symmetric by construction");
    r2.reindex(&family_ctx(&[("X", a), ("Y", b)])).expect("same variables")
}

/// `Q^{(d)}_{i,j}` in the context `X1..Xd`, uncached.
pub(crate) fn compute_q(i: usize, j: usize, d: usize) -> ZPoly {
    let ctx = family_ctx(&[("U", d)]);
    let mut factors = Vec::new();
    for subset in subsets(d, j) {
        let mut f = ZPoly::one(&ctx);
        for s in subset {
            f = &f * &ZPoly::var_at(&ctx, s);
        }
        factors.push(f);
    }
    let coeff = product_coefficients(&ctx, &factors, i).swap_remove(i);
    symmetric_reduce(&coeff, &strs(&family("U", d)), &strs(&family("X", d))).expect("symmetric by construction")
}

/// `R_n` at arity `m` by triple reduction, in `X1..Xm, Y1..Ym, Z1..Zm`, uncached.
pub(crate) fn compute_r_direct(n: usize, m: usize) -> ZPoly {
    let ctx = family_ctx(&[("U", m), ("V", m), ("W", m)]);
    let mut factors = Vec::with_capacity(m * m * m);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let f = &(&ZPoly::var_at(&ctx, i) * &ZPoly::var_at(&ctx, m + j)) * &ZPoly::var_at(&ctx, 2 * m + k);
                factors.push(f);
            }
        }
    }
    let coeff = product_coefficients(&ctx, &factors, n).swap_remove(n);
    let r1 = symmetric_reduce(&coeff, &strs(&family("U", m)), &strs(&family("X", m))).expect("symmetric");
    let r2 = symmetric_reduce(&r1, &strs(&family("V", m)), &strs(&family("Y", m))).expect("symmetric");
    let r3 = symmetric_reduce(&r2, &strs(&family("W", m)), &strs(&family("Z", m))).expect("symmetric");
    r3.reindex(&family_ctx(&[("X", m), ("Y", m), ("Z", m)])).expect("same variables")
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `P^{(a,b)}_n` with `a, b` clamped to `n`.
pub fn universal_p_bounded(n: usize, a: usize, b: usize) -> Arc<ZPoly> {
    let (a, b) = (a.min(n), b.min(n));
    cached(UniKey::P { n, a, b }, || compute_p(n, a, b))
}

pub fn universal_p(n: usize) -> UniversalPoly {
    UniversalPoly { kind: UniKind::P(n), value: (*universal_p_bounded(n, n, n)).clone(), arity_used: n }
}

/// `Q^{(d)}_{i,j}`, with `d` clamped to `i*j`.
pub fn universal_q_bounded(i: usize, j: usize, d: usize) -> Arc<ZPoly> {
    let d = d.min(i * j);
    cached(UniKey::Q { i, j, d }, || compute_q(i, j, d))
}

pub fn universal_q(i: usize, j: usize) -> Result<UniversalPoly> {
    if j == 0 {
        return Err(Error::Index("Q_{i,j} needs j >= 1".into()));
    }
    Ok(UniversalPoly { kind: UniKind::Q(i, j), value: (*universal_q_bounded(i, j, i * j)).clone(), arity_used: i * j })
}

/// `P^{(a, min(n, b*c))}_n(X, P^{(b,c)}_1(Y,Z), ...)` in `X1..Xa, Y1..Yb, Z1..Zc`.
pub fn universal_r_composed_bounded(n: usize, a: usize, b: usize, c: usize) -> Arc<ZPoly> {
    let (a, b, c) = (a.min(n), b.min(n), c.min(n));
    cached(UniKey::RComposed { n, a, b, c }, || {
        let inner = (b * c).min(n);
        let outer = universal_p_bounded(n, a, inner);
        let target = family_ctx(&[("X", a), ("Y", b), ("Z", c)]);
        let mut bind = BTreeMap::new();
        for k in 1..=inner {
            let pk = universal_p_bounded(k, b, c);
            // rename X -> Y and Y -> Z inside P_k
            let mut ren = BTreeMap::new();
            for v in pk.ctx().vars() {
                let name = if let Some(s) = v.name.strip_prefix('X') {
                    format!("Y{s}")
                } else {
                    format!("Z{}", &v.name[1..])
                };
                ren.insert(v.name.clone(), ZPoly::var(&target, &name).expect("renamed variable"));
            }
            bind.insert(format!("Y{k}"), pk.substitute(&ren, &target).expect("renaming"));
        }
        outer.substitute(&bind, &target).expect("composition")
    })
}

pub fn universal_r(n: usize, method: RMethod) -> UniversalPoly {
    let value = match method {
        RMethod::Direct => (*cached(UniKey::RDirect { n, m: n }, || compute_r_direct(n, n))).clone(),
        RMethod::Composed => (*universal_r_composed_bounded(n, n, n, n)).clone(),
    };
    UniversalPoly { kind: UniKind::R(n), value, arity_used: n }
}
