//! Isometry witnesses for exterior, symmetric and tensor constructions, and
//! class equations decided by invariants.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gram::{check_congruence, check_embedding, multisets, subsets, GramForm, Symmetry};
use super::invariants::{gw_identity_check, invariants, invariants_of_diagonal, GWQInvariants};
use super::matrix::{int, Matrix};
use crate::error::{Error, Result};
use crate::params;
use crate::report::{Entry, Param, VerificationReport};

type Q = BigRational;
type QG = GramForm<Q>;
type QM = Matrix<Q>;

fn q(x: i64) -> Q {
    int(x)
}

/// Sign of the permutation sorting the concatenation `i ++ j`, or 0 if they overlap.
fn wedge_sign(i: &[usize], j: &[usize]) -> i64 {
    let mut v: Vec<usize> = i.iter().chain(j).copied().collect();
    let mut sign = 1;
    for a in 0..v.len() {
        for b in 0..v.len() - 1 - a {
            if v[b] == v[b + 1] {
                return 0;
            }
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return 0;
    }
    sign
}

/// The full exterior algebra `⋀V = ⊕_i ⋀^i V` with its block-diagonal Gram and
/// the offsets of the graded pieces.
fn exterior_algebra(f: &QG) -> Result<(QM, Vec<Vec<usize>>, Vec<usize>)> {
    let n = f.rank();
    let mut gram = QM::zeros(0, 0);
    let mut basis = Vec::new();
    let mut offsets = Vec::new();
    for i in 0..=n {
        offsets.push(basis.len());
        basis.extend(subsets(n, i));
        gram = gram.block_diag(f.ext_power(i)?.matrix());
    }
    offsets.push(basis.len());
    Ok((gram, basis, offsets))
}

/// Matrix of `s_V` on `⋀V` for a nondegenerate skew form of rank `n`:
/// `nu(s(v), w) = lambda(v ∧ w)`, where `lambda` reads the top coefficient.
/// With `L[I, J] = sign(I ++ J)` this is `S = (G^{-1})^T L^T`.
pub fn s_v_matrix(f: &QG) -> Result<(QM, Vec<usize>)> {
    let (g, basis, offsets) = exterior_algebra(f)?;
    let n = f.rank();
    let dim = basis.len();
    let mut l = QM::zeros(dim, dim);
    for (a, i) in basis.iter().enumerate() {
        for (b, j) in basis.iter().enumerate() {
            if i.len() + j.len() == n {
                l[(a, b)] = q(wedge_sign(i, j));
            }
        }
    }
    let s = g.inverse()?.transpose().mul(&l.transpose())?;
    Ok((s, offsets))
}

/// `s_V` restricted to `⋀^i V -> ⋀^{n-i} V`.
pub fn s_v_block(f: &QG, i: usize) -> Result<QM> {
    let n = f.rank();
    let (s, off) = s_v_matrix(f)?;
    let rows: Vec<usize> = (off[n - i]..off[n - i + 1]).collect();
    let cols: Vec<usize> = (off[i]..off[i + 1]).collect();
    Ok(s.select(&rows, &cols))
}

/// `⋀^2 V -> V ⊗ V`, `v_a ∧ v_b -> v_a ⊗ v_b - v_b ⊗ v_a`.
pub fn antisymmetrizer(d: usize) -> QM {
    let basis = subsets(d, 2);
    let mut m = QM::zeros(d * d, basis.len());
    for (c, ab) in basis.iter().enumerate() {
        let (a, b) = (ab[0], ab[1]);
        m[(a * d + b, c)] = q(1);
        m[(b * d + a, c)] = q(-1);
    }
    m
}

/// `Sym^2 V -> V ⊗ V`, `v_a v_b -> v_a ⊗ v_b + v_b ⊗ v_a`.
pub fn symmetrizer(d: usize) -> QM {
    let basis = multisets(d, 2);
    let mut m = QM::zeros(d * d, basis.len());
    for (c, ab) in basis.iter().enumerate() {
        let (a, b) = (ab[0], ab[1]);
        let v = m[(a * d + b, c)].clone() + q(1);
        m[(a * d + b, c)] = v;
        let w = m[(b * d + a, c)].clone() + q(1);
        m[(b * d + a, c)] = w;
    }
    m
}

fn hstack(a: &QM, b: &QM) -> QM {
    let mut m = QM::zeros(a.rows(), a.cols() + b.cols());
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            m[(r, c)] = a[(r, c)].clone();
        }
        for c in 0..b.cols() {
            m[(r, a.cols() + c)] = b[(r, c)].clone();
        }
    }
    m
}

/// Witness for `⋀^n H_δ(E) ≃ H_δ(F)` (`n` odd, `E` trivial of rank `r`): the
/// basis vectors with at most `(n-1)/2` factors from `E` span `F`, the others
/// are mapped to the dual basis through the inverse of the pairing block.
/// Returns `(B, ⋀^n H, H_δ(F))` with `B^T (⋀^n H) B = H_δ(F)`.
pub fn lambda_hyp_witness(r: usize, n: usize, delta: Symmetry) -> Result<(QM, QG, QG)> {
    let h = QG::hyperbolic(r, delta);
    let ext = h.ext_power(n)?;
    let basis = subsets(2 * r, n);
    let e_count = |i: &Vec<usize>| i.iter().filter(|&&x| x < r).count();
    let small: Vec<usize> = (0..basis.len()).filter(|&a| 2 * e_count(&basis[a]) < n).collect();
    let large: Vec<usize> = (0..basis.len()).filter(|&a| 2 * e_count(&basis[a]) > n).collect();
    let d = small.len();
    if large.len() != d {
        return Err(Error::Witness);
    }
    let p = ext.matrix().select(&small, &large);
    let pinv = p.inverse()?;
    let dim = basis.len();
    let mut b = QM::zeros(dim, dim);
    for (c, &a) in small.iter().enumerate() {
        b[(a, c)] = q(1);
    }
    for (k, &a) in large.iter().enumerate() {
        for c in 0..d {
            b[(a, d + c)] = pinv[(k, c)].clone();
        }
    }
    Ok((b, ext, QG::hyperbolic(d, delta.pow(n))))
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Bounds for [`check_forms`].
#[derive(Clone, Debug)]
pub struct FormBounds {
    pub rank_n_max_m: usize,
    pub hyp_max_rank: usize,
    pub hyp_ns: Vec<usize>,
    pub lambda_22_pairs: usize,
    pub lambda_ef_pairs: usize,
    pub hilbert_forms: usize,
    pub seed: u64,
}

impl Default for FormBounds {
    fn default() -> Self {
        FormBounds {
            rank_n_max_m: 3,
            hyp_max_rank: 2,
            hyp_ns: vec![1, 3, 5],
            lambda_22_pairs: 12,
            lambda_ef_pairs: 6,
            hilbert_forms: 120,
            seed: 2024,
        }
    }
}

fn entry(lemma: &str, ps: Vec<Param>, f: impl FnOnce() -> Result<(bool, String, String)>) -> Entry {
    match f() {
        Ok((ok, l, r)) => Entry::new(lemma, ps, ok, l, r),
        Err(e) => Entry::error(lemma, ps, e),
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n != 0 {
            return BigRational::new(BigInt::from(n), BigInt::from(rng.gen_range(1..=4)));
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng, sym: Symmetry, dim: usize) -> QG {
    assert!(sym == Symmetry::Symmetric || dim % 2 == 0, "odd skew forms are degenerate");
    loop {
        let mut m = QM::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                if i == j && sym == Symmetry::Skew {
                    continue;
                }
                let x = if rng.gen_bool(0.3) { q(0) } else { random_rational(rng) };
                m[(i, j)] = x.clone();
                m[(j, i)] = if sym == Symmetry::Skew { -x } else { x };
            }
        }
        let f = QG::new(m, sym).expect("built symmetric");
        if f.is_nondegenerate() {
            return f;
        }
    }
}

fn describe(i: &Option<GWQInvariants>) -> String {
    match i {
        Some(v) => format!("rank {} sig {} disc {}", v.rank, v.signature, v.disc),
        None => "0".into(),
    }
}

pub fn check_forms(b: &FormBounds) -> VerificationReport {
    let mut r = VerificationReport::new("forms");
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);

    for m in 1..=b.rank_n_max_m {
        let v = QG::hyperbolic(m, Symmetry::Skew);
        for i in 0..=2 * m {
            r.push(entry("lambda_n_rank_n", params![m, i], || {
                let s = s_v_block(&v, i)?;
                let (src, dst) = (v.ext_power(i)?, v.ext_power(2 * m - i)?);
                let ok = check_congruence(&s, &dst, &src)?;
                Ok((ok, format!("{:?}", src.matrix()), format!("s^T {:?} s", dst.matrix())))
            }));
        }
    }

    let plane_cases = [("<1,-1>", QG::diagonal_i64(&[1, -1])), ("symplectic", QG::hyperbolic(1, Symmetry::Skew))];
    for (name, v) in &plane_cases {
        let d = v.rank();
        let vv = v.tensor(v);
        r.push(entry("sym_lambda_minus", params![*name], || {
            let g = v.ext_power(2)?.scale(&q(2))?;
            let ok = check_embedding(&antisymmetrizer(d), &vv, &g)?;
            Ok((ok, "i^T (V⊗V) i".into(), format!("{:?}", g.matrix())))
        }));
        r.push(entry("sym_lambda_plus", params![*name], || {
            let g = v.sym_power(2)?.scale(&q(2))?;
            let ok = check_embedding(&symmetrizer(d), &vv, &g)?;
            Ok((ok, "j^T (V⊗V) j".into(), format!("{:?}", g.matrix())))
        }));
        r.push(entry("tens2_decomp", params![*name], || {
            let rhs = v.sym_power(2)?.scale(&q(2))?.direct_sum(&v.ext_power(2)?.scale(&q(2))?)?;
            let w = hstack(&symmetrizer(d), &antisymmetrizer(d));
            let ok = check_congruence(&w, &vv, &rhs)?;
            let c = gw_identity_check(&[(1, vv.clone())], &[(1, rhs)])?;
            Ok((ok && c.equal, describe(&c.lhs), describe(&c.rhs)))
        }));
    }

    let syms = [Symmetry::Symmetric, Symmetry::Skew];
    for t in 0..b.lambda_ef_pairs {
        let (se, sf) = (syms[t % 2], syms[(t / 2) % 2]);
        let e = random_form(&mut rng, se, 2);
        let f = random_form(&mut rng, sf, if sf == Symmetry::Skew { 2 } else { 2 + t % 2 });
        r.push(entry("lambda_ef", params![t], || {
            let lhs = e.tensor(&f).ext_power(2)?;
            let a = e.sym_power(2)?.tensor(&f.ext_power(2)?).scale(&q(2))?;
            let bb = e.ext_power(2)?.tensor(&f.sym_power(2)?).scale(&q(2))?;
            let c = gw_identity_check(&[(1, lhs)], &[(1, a), (1, bb)])?;
            Ok((c.equal, describe(&c.lhs), describe(&c.rhs)))
        }));
    }

    for rank in 1..=b.hyp_max_rank {
        for &n in &b.hyp_ns {
            for delta in syms {
                let dn = if delta == Symmetry::Symmetric { "+" } else { "-" };
                let rank_f: usize = (0..=(n - 1) / 2).map(|j| binom(rank, j) * binom(rank, n - j)).sum();
                let rank_ext = binom(2 * rank, n);
                r.push(Entry::new(
                    "lambda_hyp_rank",
                    params![rank, n, dn],
                    rank_ext == 2 * rank_f,
                    rank_ext.to_string(),
                    format!("2*{rank_f}"),
                ));
                if n > 2 * rank {
                    continue;
                }
                r.push(entry("lambda_hyp", params![rank, n, dn], || {
                    let (w, ext, hf) = lambda_hyp_witness(rank, n, delta)?;
                    let mut ok = check_congruence(&w, &ext, &hf)?;
                    if delta == Symmetry::Symmetric {
                        ok &= invariants(&ext)?.same_class(&invariants(&hf)?);
                    }
                    Ok((ok, format!("{:?}", ext.matrix()), format!("H({})", hf.rank() / 2)))
                }));
            }
        }
    }

    // h_{2i}(a) b = h_{2(i+j)}(a f(b)): diag(1, 1 ⊗ nu) pulls the hyperbolic form back
    let nus = [
        ("<1>", QG::diagonal_i64(&[1])),
        ("<2,3>", QG::diagonal_i64(&[2, 3])),
        ("symplectic", QG::symplectic_plane(q(3))),
    ];
    for a in 1..=2usize {
        for (name, nu) in &nus {
            for eps_prime in syms {
                let ep = eps_prime.sign();
                r.push(entry("proj_h", params![a, *name, ep], || {
                    let bdim = nu.rank();
                    let inu = QM::identity(a).kron(nu.matrix());
                    let mut src = QM::zeros(2 * a * bdim, 2 * a * bdim);
                    let k = a * bdim;
                    for i in 0..k {
                        for j in 0..k {
                            src[(i, k + j)] = inu[(i, j)].clone();
                            src[(k + i, j)] = q(ep) * inu[(i, j)].clone();
                        }
                    }
                    let s = nu.sym().times(eps_prime);
                    let src = QG::new(src, s)?;
                    let w = QM::identity(k).block_diag(&inu);
                    let ok = check_congruence(&w, &QG::hyperbolic(k, s), &src)?;
                    Ok((ok, "diag(1, 1⊗nu)^T H diag(1, 1⊗nu)".into(), format!("{:?}", src.matrix())))
                }));
            }
        }
    }

    for t in 0..b.lambda_22_pairs {
        let e = QG::symplectic_plane(random_rational(&mut rng));
        let f = random_form(&mut rng, Symmetry::Skew, 2);
        let ef = e.tensor(&f);
        for n in 0..=4usize {
            r.push(entry("lambda_22", params![t, n], || {
                let lhs = ef.ext_power(n)?;
                let c = match n {
                    1 | 3 => gw_identity_check(&[(1, lhs)], &[(1, ef.clone())])?,
                    2 => gw_identity_check(
                        &[(1, lhs), (2, QG::diagonal_i64(&[1]))],
                        &[(1, e.tensor(&e)), (1, f.tensor(&f))],
                    )?,
                    _ => gw_identity_check(&[(1, lhs)], &[(1, QG::diagonal_i64(&[1]))])?,
                };
                Ok((c.equal, describe(&c.lhs), describe(&c.rhs)))
            }));
        }
    }

    let mut ok_count = 0;
    for _ in 0..b.hilbert_forms {
        let dim = rng.gen_range(1..=5);
        let d: Vec<BigInt> = (0..dim)
            .map(|_| loop {
                let x: i64 = rng.gen_range(-20..=20);
                if x != 0 {
                    break BigInt::from(x);
                }
            })
            .collect();
        let diag: Vec<Q> = d.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let inv = invariants(&QG::diagonal(&diag)).expect("nondegenerate");
        if inv.hilbert_product() == 1 && inv.same_class(&invariants_of_diagonal(&d)) {
            ok_count += 1;
        }
    }
    r.push(Entry::new(
        "hilbert_product",
        params![b.hilbert_forms],
        ok_count == b.hilbert_forms,
        format!("{ok_count}/{}", b.hilbert_forms),
        format!("{0}/{0}", b.hilbert_forms),
    ));

    r.push(entry("lambda2_hyperbolic_disc", params![], || {
        let i = invariants(&QG::hyperbolic(1, Symmetry::Symmetric).ext_power(2)?)?;
        let one = invariants(&QG::diagonal_i64(&[1]))?;
        Ok((i.disc == BigInt::from(-1) && !i.same_class(&one), i.disc.to_string(), "-1, not <1>".into()))
    }));

    r.finalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_v_on_the_plane() {
        // basis of ⋀V: 1, v1, v2, v1∧v2
        let v = QG::hyperbolic(1, Symmetry::Skew);
        let (s, _) = s_v_matrix(&v).unwrap();
        let want = QM::from_i64(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 0]]).unwrap();
        assert_eq!(s, want);
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_sign(&[0], &[1]), 1);
        assert_eq!(wedge_sign(&[1], &[0]), -1);
        assert_eq!(wedge_sign(&[0, 1], &[1]), 0);
        assert_eq!(wedge_sign(&[2], &[0, 1]), 1);
    }

    #[test]
    fn hyp_witness_rank_two() {
        for delta in [Symmetry::Symmetric, Symmetry::Skew] {
            let (w, ext, hf) = lambda_hyp_witness(2, 3, delta).unwrap();
            assert_eq!(hf.rank(), 4);
            assert!(check_congruence(&w, &ext, &hf).unwrap());
        }
    }

    #[test]
    fn default_report_passes() {
        let r = check_forms(&FormBounds { lambda_22_pairs: 2, lambda_ef_pairs: 4, hilbert_forms: 20, ..Default::default() });
        let f: Vec<_> = r.failures().collect();
        assert!(f.is_empty(), "{f:?}");
    }
}
