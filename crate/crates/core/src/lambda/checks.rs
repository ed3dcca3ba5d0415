//! Lambda-ring axioms and Adams-operation laws on a sample set.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    adams, adams_by_substitution, adams_signed, canonical_parts, forgetful_class, k_adams, lambda_t, lambda_t_parts,
    newton, KRing, Part,
};
use crate::error::Result;
use crate::gw::GWElem;
use crate::params;
use crate::report::{Entry, Param, VerificationReport};
use crate::symfunc::{universal_p_bounded, universal_q_bounded};
use crate::symring::{SymClass, SymRing};

#[derive(Clone, Debug)]
pub struct AxiomBounds {
    /// `L1` for `1 <= n <= l1_max_n`.
    pub l1_max_n: usize,
    /// `L2` for `i, j >= 1` with `ij <= l2_max_ij`.
    pub l2_max_ij: usize,
    /// Composition `psi^m psi^n` for `1 <= m, n <= psi_max`; additivity and
    /// multiplicativity for `n <= psi_max`.
    pub psi_max: u32,
    /// Substitution oracle, rank and forgetful checks for `n <= subst_max`.
    pub subst_max: u32,
    pub seed: u64,
}

impl Default for AxiomBounds {
    fn default() -> Self {
        AxiomBounds { l1_max_n: 6, l2_max_ij: 8, psi_max: 4, subst_max: 6, seed: 17 }
    }
}

/// The `L1` sample set `{u1, u2, tau, <-1>, u1 u2, u1 + tau}` and the `L2`
/// set `{u1, u1 + u2, tau + u1}`, all in `Z[eps, tau, gamma^{±1}][u1, u2]`.
pub fn default_samples() -> (Vec<(String, SymClass)>, Vec<(String, SymClass)>) {
    let r = SymRing::new(2, "u");
    let u1 = SymClass::generator(&r, 0).expect("k = 2");
    let u2 = SymClass::generator(&r, 1).expect("k = 2");
    let tau = SymClass::constant(&r, GWElem::tau());
    let l1 = vec![
        ("u1".to_string(), u1.clone()),
        ("u2".to_string(), u2.clone()),
        ("tau".to_string(), tau.clone()),
        ("<-1>".to_string(), SymClass::constant(&r, GWElem::minus_one())),
        ("u1*u2".to_string(), u1.mul(&u2)),
        ("u1+tau".to_string(), u1.add(&tau)),
    ];
    let l2 = vec![
        ("u1".to_string(), u1.clone()),
        ("u1+u2".to_string(), u1.add(&u2)),
        ("tau+u1".to_string(), tau.add(&u1)),
    ];
    (l1, l2)
}

/// Index of the last nonzero coefficient among `1..=n`.
fn effective_dim(coeffs: &[SymClass], n: usize) -> usize {
    (1..=n).rev().find(|&k| !coeffs[k].is_zero()).unwrap_or(0)
}

fn l1_entry(n: usize, (xn, x): &(String, SymClass), (yn, y): &(String, SymClass)) -> Result<Entry> {
    let lhs = lambda_t(&x.mul(y), n)?.coeffs()[n].clone();
    let lx = lambda_t(x, n)?;
    let ly = lambda_t(y, n)?;
    let (a, b) = (effective_dim(lx.coeffs(), n), effective_dim(ly.coeffs(), n));
    let one = SymClass::one(x.ring());
    let rhs = if a == 0 || b == 0 {
        SymClass::zero(x.ring())
    } else {
        let p = universal_p_bounded(n, a, b);
        let mut vals = lx.coeffs()[1..=a.min(n)].to_vec();
        vals.extend_from_slice(&ly.coeffs()[1..=b.min(n)]);
        p.eval_ring(&vals, &one)?
    };
    Ok(Entry::new("L1", params![n, xn.as_str(), yn.as_str()], lhs == rhs, lhs.to_text(), rhs.to_text()))
}

fn l2_entry(i: usize, j: usize, (zn, z): &(String, SymClass)) -> Result<Entry> {
    let inner = lambda_t(z, j)?.coeffs()[j].clone();
    let lhs = lambda_t(&inner, i)?.coeffs()[i].clone();
    let lz = lambda_t(z, i * j)?;
    let d = effective_dim(lz.coeffs(), i * j);
    let rhs = if d == 0 {
        // lambda^j(z) = 0 for j >= 1, so lambda^i of it vanishes for i >= 1
        SymClass::zero(z.ring())
    } else {
        let q = universal_q_bounded(i, j, d);
        q.eval_ring(&lz.coeffs()[1..=d.min(i * j)], &SymClass::one(z.ring()))?
    };
    Ok(Entry::new("L2", params![i, j, zn.as_str()], lhs == rhs, lhs.to_text(), rhs.to_text()))
}

/// `psi^n` by Newton's identity with no homogeneity requirement.
fn adams_unchecked(n: u32, x: &SymClass) -> Result<SymClass> {
    if n == 0 {
        return Ok(SymClass::constant(x.ring(), GWElem::from_bigint(x.rank_formal())));
    }
    Ok(newton(&lambda_t(x, n as usize)?, n as usize)?.pop().expect("n >= 1"))
}

/// Randomly reorder, split multiplicities and permute primitive factors.
fn shuffled_parts(x: &SymClass, rng: &mut ChaCha8Rng) -> Vec<Part> {
    let mut parts = Vec::new();
    for mut p in canonical_parts(x) {
        p.factors.shuffle(rng);
        let m = p.mult.clone();
        if m > BigInt::from(1) || m < BigInt::from(-1) {
            let a = BigInt::from(rng.gen_range(-3i64..=3));
            let mut q = p.clone();
            q.mult = &m - &a;
            p.mult = a;
            parts.push(q);
        }
        parts.push(p);
    }
    parts.shuffle(rng);
    parts
}

fn entry_or_error(lemma: &str, params: Vec<Param>, f: impl FnOnce() -> Result<Entry>) -> Entry {
    f().unwrap_or_else(|e| Entry::error(lemma, params, e))
}

pub fn check_lambda_axioms(
    samples: &[(String, SymClass)],
    l2_samples: &[(String, SymClass)],
    bounds: &AxiomBounds,
) -> VerificationReport {
    type Job<'a> = Box<dyn Fn() -> Entry + Send + Sync + 'a>;
    let mut jobs: Vec<Job> = Vec::new();

    for (a, x) in samples.iter().enumerate() {
        for y in &samples[a..] {
            for n in 1..=bounds.l1_max_n {
                jobs.push(Box::new(move || {
                    entry_or_error("L1", params![n, x.0.as_str(), y.0.as_str()], || l1_entry(n, x, y))
                }));
            }
        }
    }
    for z in l2_samples {
        for i in 1..=bounds.l2_max_ij {
            for j in 1..=bounds.l2_max_ij / i {
                jobs.push(Box::new(move || entry_or_error("L2", params![i, j, z.0.as_str()], || l2_entry(i, j, z))));
            }
        }
    }
    for (name, x) in samples {
        for m in 1..=bounds.psi_max {
            for n in 1..=bounds.psi_max {
                jobs.push(Box::new(move || {
                    let ps = params![m, n, name.as_str()];
                    entry_or_error("psi_compose", ps.clone(), || {
                        let lhs = adams(m, &adams(n, x)?)?;
                        let rhs = adams(m * n, x)?;
                        Ok(Entry::new("psi_compose", ps, lhs == rhs, lhs.to_text(), rhs.to_text()))
                    })
                }));
            }
        }
        for n in 0..=bounds.subst_max {
            jobs.push(Box::new(move || {
                let ps = params![n, name.as_str()];
                entry_or_error("psi_rank", ps.clone(), || {
                    let v = adams(n, x)?.rank()?;
                    let r = x.rank()?;
                    Ok(Entry::new("psi_rank", ps, v == r, v.to_string(), r.to_string()))
                })
            }));
            jobs.push(Box::new(move || {
                let ps = params![n, name.as_str()];
                entry_or_error("lambda_degree", ps.clone(), || {
                    let d = x.degree()?;
                    let l = lambda_t(x, n as usize)?.coeffs()[n as usize].clone();
                    let ok = l.is_zero() || l.degree()? == d * n as i64;
                    Ok(Entry::new("lambda_degree", ps, ok, format!("{:?}", l.grading()), format!("{}", d * n as i64)))
                })
            }));
        }
        for n in -3..=bounds.subst_max as i64 {
            jobs.push(Box::new(move || {
                let ps = params![n, name.as_str()];
                entry_or_error("psi_substitution", ps.clone(), || {
                    let lhs = adams_signed(n, x)?;
                    let rhs = adams_by_substitution(n, x)?;
                    Ok(Entry::new("psi_substitution", ps, lhs == rhs, lhs.to_text(), rhs.to_text()))
                })
            }));
        }
        for n in 1..=bounds.psi_max {
            jobs.push(Box::new(move || {
                let ps = params![n, name.as_str()];
                entry_or_error("forgetful_psi", ps.clone(), || {
                    let kr = KRing::new(x.ring().k, &x.ring().prefix);
                    let lhs = forgetful_class(&adams(n, x)?, &kr);
                    let rhs = k_adams(n as usize, &forgetful_class(x, &kr), &kr)?;
                    Ok(Entry::new("forgetful_psi", ps, lhs == rhs, lhs.to_text(), rhs.to_text()))
                })
            }));
        }
        let seed = bounds.seed;
        jobs.push(Box::new(move || {
            let ps = params![name.as_str()];
            entry_or_error("decomposition", ps.clone(), || {
                let order = 6;
                let direct = lambda_t(x, order)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut ok = true;
                for _ in 0..4 {
                    ok &= lambda_t_parts(x.ring(), &shuffled_parts(x, &mut rng), order)? == direct;
                }
                Ok(Entry::new("decomposition", ps, ok, "shuffled decompositions", "canonical"))
            })
        }));
    }
    for (a, x) in samples.iter().enumerate() {
        for y in &samples[a..] {
            for n in 1..=bounds.psi_max {
                jobs.push(Box::new(move || {
                    let ps = params![n, x.0.as_str(), y.0.as_str()];
                    entry_or_error("psi_additive", ps.clone(), || {
                        let lhs = adams_unchecked(n, &x.1.add(&y.1))?;
                        let rhs = adams_unchecked(n, &x.1)?.add(&adams_unchecked(n, &y.1)?);
                        Ok(Entry::new("psi_additive", ps, lhs == rhs, lhs.to_text(), rhs.to_text()))
                    })
                }));
                jobs.push(Box::new(move || {
                    let ps = params![n, x.0.as_str(), y.0.as_str()];
                    entry_or_error("psi_multiplicative", ps.clone(), || {
                        let lhs = adams(n, &x.1.mul(&y.1))?;
                        let rhs = adams(n, &x.1)?.mul(&adams(n, &y.1)?);
                        Ok(Entry::new("psi_multiplicative", ps, lhs == rhs, lhs.to_text(), rhs.to_text()))
                    })
                }));
            }
        }
    }

    let entries: Vec<Entry> = jobs.par_iter().map(|j| j()).collect();
    let mut r = VerificationReport::new("lambda-axioms");
    for e in entries {
        r.push(e);
    }
    r.finalize()
}

/// Convenience: the default report.
pub fn default_report() -> VerificationReport {
    let (l1, l2) = default_samples();
    check_lambda_axioms(&l1, &l2, &AxiomBounds::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        let (l1, l2) = default_samples();
        let b = AxiomBounds { l1_max_n: 3, l2_max_ij: 4, psi_max: 2, subst_max: 3, seed: 1 };
        let r = check_lambda_axioms(&l1[..3], &l2[..2], &b);
        let fails: Vec<_> = r.failures().collect();
        assert!(fails.is_empty(), "{fails:?}");
    }
}
