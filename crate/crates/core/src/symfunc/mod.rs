//! Symmetric polynomials: elementary basis, reduction, universal polynomials.

mod appendix;
mod universal;

pub use appendix::check_appendix_b;
pub use universal::{
    cache_clear, cache_len, load_cache, save_cache, universal_p, universal_p_bounded, universal_q,
    universal_q_bounded, universal_r, universal_r_composed_bounded, RMethod, UniKey, UniKind,
    UniversalPoly,
};

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Ctx, VarId, ZPoly};

/// Names `prefix1, ..., prefixm`.
pub fn family(prefix: &str, m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("{prefix}{i}")).collect()
}

/// Polynomial context over the given families, in order.
pub fn family_ctx(families: &[(&str, usize)]) -> Arc<Ctx> {
    let mut vars = Vec::new();
    for (p, m) in families {
        vars.extend(family(p, *m).into_iter().map(VarId::poly));
    }
    Ctx::new(vars).expect("distinct family names")
}

/// `sigma_n` of the variables at positions `vars` of `ctx`.
pub fn elementary_in(ctx: &Arc<Ctx>, vars: &[usize], n: usize) -> ZPoly {
    let mut e: Vec<ZPoly> = vec![ZPoly::one(ctx)];
    e.extend((0..n).map(|_| ZPoly::zero(ctx)));
    for &v in vars {
        let x = ZPoly::var_at(ctx, v);
        for k in (1..=n).rev() {
            if !e[k - 1].is_zero() {
                e[k] = &e[k] + &(&e[k - 1] * &x);
            }
        }
    }
    e.swap_remove(n)
}

/// `sigma_n(U_1, ..., U_m)` in a fresh context `U1..Um`.
pub fn elementary(m: usize, n: usize) -> ZPoly {
    let ctx = family_ctx(&[("U", m)]);
    let vars: Vec<usize> = (0..m).collect();
    elementary_in(&ctx, &vars, n)
}

/// Coefficients `e_0..e_n` of `prod_k (1 + t z_k)` for monomial-like factors.
pub(crate) fn product_coefficients(ctx: &Arc<Ctx>, factors: &[ZPoly], n: usize) -> Vec<ZPoly> {
    let mut e: Vec<ZPoly> = vec![ZPoly::one(ctx)];
    e.extend((0..n).map(|_| ZPoly::zero(ctx)));
    for z in factors {
        for k in (1..=n).rev() {
            if !e[k - 1].is_zero() {
                e[k] = &e[k] + &(&e[k - 1] * z);
            }
        }
    }
    e
}

type Inner = HashMap<Vec<i32>, BigInt>;

fn add_into(map: &mut Inner, key: Vec<i32>, c: BigInt) {
    use std::collections::hash_map::Entry;
    match map.entry(key) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
    }
}

/// Express `p`, symmetric in the variables named `family`, as a polynomial in
/// the elementary symmetric functions of that family (named `targets`), with
/// the remaining variables of `p` carried along as coefficients.
///
/// The result lives in the context `targets ++ (other variables of p)`.
/// Evaluating it at `targets[k-1] = sigma_k(family)` reproduces `p`.
pub fn symmetric_reduce(p: &ZPoly, family: &[&str], targets: &[&str]) -> Result<ZPoly> {
    let ctx = p.ctx();
    let m = family.len();
    if targets.len() != m {
        return Err(Error::Index(format!("{} targets for {} variables", targets.len(), m)));
    }
    let fam: Vec<usize> = family.iter().map(|n| ctx.var(n)).collect::<Result<_>>()?;
    for w in fam.windows(2) {
        if p.swap_vars(w[0], w[1]) != *p {
            return Err(Error::Symmetry(ctx.name(w[0]).into(), ctx.name(w[1]).into()));
        }
    }
    let others: Vec<usize> = (0..ctx.len()).filter(|i| !fam.contains(i)).collect();
    let mut out_vars: Vec<VarId> = targets.iter().map(|t| VarId::poly(*t)).collect();
    out_vars.extend(others.iter().map(|&i| ctx.vars()[i].clone()));
    let out_ctx = Ctx::new(out_vars)?;

    // split: family exponents -> (other exponents -> coefficient)
    let mut work: BTreeMap<Vec<i32>, Inner> = BTreeMap::new();
    for (mono, c) in p.terms() {
        let fe: Vec<i32> = fam.iter().map(|&i| mono.exp(i)).collect();
        if fe.iter().any(|&e| e < 0) {
            return Err(Error::Exponent { var: family[0].to_string(), exp: *fe.iter().min().unwrap() as i64 });
        }
        let oe: Vec<i32> = others.iter().map(|&i| mono.exp(i)).collect();
        add_into(work.entry(fe).or_default(), oe, c.clone());
    }

    let sigmas: Vec<Inner> = (0..=m).map(|k| sigma_map(m, k)).collect();
    let mut powers: HashMap<Vec<i32>, Inner> = HashMap::new();
    let mut result: Vec<(Vec<i32>, BigInt)> = Vec::new();

    while let Some((alpha, coeff)) = work.pop_last() {
        if coeff.is_empty() {
            continue;
        }
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            // cannot happen for symmetric input
            return Err(Error::Symmetry(family[0].into(), family[m - 1].into()));
        }
        let beta: Vec<i32> = (0..m)
            .map(|k| alpha[k] - if k + 1 < m { alpha[k + 1] } else { 0 })
            .collect();
        for (oe, c) in &coeff {
            let mut e = beta.clone();
            e.extend_from_slice(oe);
            result.push((e, c.clone()));
        }
        let prod = sigma_power(&beta, &sigmas, &mut powers);
        for (ue, sv) in prod.iter() {
            if *ue == alpha {
                continue;
            }
            let slot = work.entry(ue.clone()).or_default();
            for (oe, c) in &coeff {
                add_into(slot, oe.clone(), -(sv * c));
            }
            if slot.is_empty() {
                work.remove(ue);
            }
        }
    }
    ZPoly::from_terms(&out_ctx, result)
}

fn sigma_map(m: usize, k: usize) -> Inner {
    let mut out = Inner::new();
    if k > m {
        return out;
    }
    // all k-subsets of 0..m
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0; m];
        for &i in &idx {
            e[i] = 1;
        }
        out.insert(e, BigInt::one());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < m - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn mul_maps(a: &Inner, b: &Inner) -> Inner {
    let mut out = Inner::with_capacity(a.len() * b.len() / 2 + 1);
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut out, e, ca * cb);
        }
    }
    out
}

/// `prod_k sigma_k^{beta_k}` as a map over family exponents, memoised.
fn sigma_power(beta: &[i32], sigmas: &[Inner], memo: &mut HashMap<Vec<i32>, Inner>) -> Inner {
    if let Some(v) = memo.get(beta) {
        return v.clone();
    }
    let m = beta.len();
    let result = match beta.iter().rposition(|&b| b > 0) {
        None => {
            let mut one = Inner::new();
            one.insert(vec![0; m], BigInt::one());
            one
        }
        Some(k) => {
            let mut smaller = beta.to_vec();
            smaller[k] -= 1;
            let base = sigma_power(&smaller, sigmas, memo);
            mul_maps(&base, &sigmas[k + 1])
        }
    };
    memo.insert(beta.to_vec(), result.clone());
    result
}

/// Substitute `targets[k-1] = sigma_k(family)` into a reduced polynomial,
/// landing in `ctx` (which must contain the family and the carried variables).
pub fn expand_elementary(q: &ZPoly, targets: &[&str], family: &[&str], ctx: &Arc<Ctx>) -> Result<ZPoly> {
    let fam: Vec<usize> = family.iter().map(|n| ctx.var(n)).collect::<Result<_>>()?;
    let mut b = BTreeMap::new();
    for (k, t) in targets.iter().enumerate() {
        b.insert(t.to_string(), elementary_in(ctx, &fam, k + 1));
    }
    q.substitute(&b, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(ctx: &Arc<Ctx>, terms: &[(Vec<i32>, i64)]) -> ZPoly {
        ZPoly::from_terms(ctx, terms.iter().map(|(e, c)| (e.clone(), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn elementary_examples() {
        let c = family_ctx(&[("U", 2)]);
        assert_eq!(elementary(2, 1), poly(&c, &[(vec![1, 0], 1), (vec![0, 1], 1)]));
        assert_eq!(elementary(2, 2), poly(&c, &[(vec![1, 1], 1)]));
        assert!(elementary(2, 3).is_zero());
        assert!(elementary(2, 0).is_one());
    }

    #[test]
    fn reduce_examples() {
        let c = family_ctx(&[("U", 2)]);
        let x = family_ctx(&[("X", 2)]);
        let p = poly(&c, &[(vec![2, 0], 1), (vec![0, 2], 1)]);
        let r = symmetric_reduce(&p, &["U1", "U2"], &["X1", "X2"]).unwrap();
        assert_eq!(r, poly(&x, &[(vec![2, 0], 1), (vec![0, 1], -2)]));
        let p = poly(&c, &[(vec![1, 1], 1)]);
        assert_eq!(symmetric_reduce(&p, &["U1", "U2"], &["X1", "X2"]).unwrap(), poly(&x, &[(vec![0, 1], 1)]));
        let p = poly(&c, &[(vec![2, 1], 1), (vec![1, 2], 1)]);
        let r = symmetric_reduce(&p, &["U1", "U2"], &["X1", "X2"]).unwrap();
        assert_eq!(r, poly(&x, &[(vec![1, 1], 1)]));
        assert_eq!(expand_elementary(&r, &["X1", "X2"], &["U1", "U2"], &c).unwrap(), p);
    }

    #[test]
    fn non_symmetric_rejected() {
        let c = family_ctx(&[("U", 3)]);
        let p = poly(&c, &[(vec![1, 0, 0], 1)]);
        let err = symmetric_reduce(&p, &["U1", "U2", "U3"], &["X1", "X2", "X3"]).unwrap_err();
        assert_eq!(err, Error::Symmetry("U1".into(), "U2".into()));
    }

    #[test]
    fn coefficient_variables_are_carried() {
        let c = family_ctx(&[("U", 2), ("V", 1)]);
        // V1*(U1 + U2) + U1*U2
        let p = poly(&c, &[(vec![1, 0, 1], 1), (vec![0, 1, 1], 1), (vec![1, 1, 0], 1)]);
        let r = symmetric_reduce(&p, &["U1", "U2"], &["X1", "X2"]).unwrap();
        assert_eq!(r.to_text(), "X1*V1 + X2");
        assert_eq!(expand_elementary(&r, &["X1", "X2"], &["U1", "U2"], &c).unwrap(), p);
    }
}
