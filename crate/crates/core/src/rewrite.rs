//! A string rewriting system for words in `eps, tau, gamma, gamma^{-1}` whose
//! normal forms are the basis `{1, eps, tau} x gamma^j` of the coefficient ring.
//!
//! Rules (left-hand sides all have length two):
//!
//! ```text
//! eps eps   -> 1             gamma x   -> x gamma      (x in {eps, tau})
//! eps tau   -> -tau          gamma' x  -> x gamma'
//! tau eps   -> -tau          gamma gamma' -> 1
//! tau tau   -> 2 gamma - 2 eps gamma     gamma' gamma -> 1
//! ```
//!
//! Reduction works on formal integer combinations of words, so a step can
//! split a word into several.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::gw::GWElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Eps,
    Tau,
    Gamma,
    GammaInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::Eps, Letter::Tau, Letter::Gamma, Letter::GammaInv];

    pub fn value(self) -> GWElem {
        match self {
            Letter::Eps => GWElem::eps(),
            Letter::Tau => GWElem::tau(),
            Letter::Gamma => GWElem::gamma(),
            Letter::GammaInv => GWElem::gamma_pow(-1),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::Eps => "ε",
            Letter::Tau => "τ",
            Letter::Gamma => "γ",
            Letter::GammaInv => "γ⁻¹",
        })
    }
}

pub type Word = Vec<Letter>;

/// Integer combination of words with no zero coefficients.
pub type Combination = BTreeMap<Word, BigInt>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Right-hand side of the rule with left-hand side `(x, y)`, if any.
pub fn rule(x: Letter, y: Letter) -> Option<Vec<(i64, Word)>> {
    use Letter::*;
    Some(match (x, y) {
        (Eps, Eps) => vec![(1, vec![])],
        (Eps, Tau) | (Tau, Eps) => vec![(-1, vec![Tau])],
        (Tau, Tau) => vec![(2, vec![Gamma]), (-2, vec![Eps, Gamma])],
        (Gamma, Eps) | (Gamma, Tau) => vec![(1, vec![y, Gamma])],
        (GammaInv, Eps) | (GammaInv, Tau) => vec![(1, vec![y, GammaInv])],
        (Gamma, GammaInv) | (GammaInv, Gamma) => vec![(1, vec![])],
        _ => return None,
    })
}

fn redex(w: &[Letter], strategy: Strategy) -> Option<usize> {
    let mut positions = (0..w.len().saturating_sub(1)).filter(|&i| rule(w[i], w[i + 1]).is_some());
    match strategy {
        Strategy::Leftmost => positions.next(),
        Strategy::Rightmost => positions.last(),
    }
}

fn add_word(c: &mut Combination, w: Word, k: BigInt) {
    let slot = c.entry(w.clone()).or_insert_with(BigInt::zero);
    *slot += k;
    if slot.is_zero() {
        c.remove(&w);
    }
}

/// One rewrite step on the first reducible word (in word order) of `c`.
/// Returns `false` when `c` is already in normal form.
pub fn step(c: &mut Combination, strategy: Strategy) -> bool {
    let found = c.iter().find_map(|(w, k)| redex(w, strategy).map(|i| (w.clone(), k.clone(), i)));
    let Some((w, k, i)) = found else {
        return false;
    };
    c.remove(&w);
    for (coeff, rhs) in rule(w[i], w[i + 1]).expect("redex has a rule") {
        let mut nw = w[..i].to_vec();
        nw.extend(rhs);
        nw.extend_from_slice(&w[i + 2..]);
        add_word(c, nw, &k * coeff);
    }
    true
}

/// Reduce to normal form, returning the number of steps taken.
pub fn normalize(c: &mut Combination, strategy: Strategy) -> usize {
    let mut n = 0;
    while step(c, strategy) {
        n += 1;
    }
    n
}

pub fn normal_form(word: &[Letter], strategy: Strategy) -> Combination {
    let mut c = Combination::new();
    c.insert(word.to_vec(), BigInt::from(1));
    normalize(&mut c, strategy);
    c
}

/// Interpret a normal-form combination as a ring element.
pub fn to_gw(c: &Combination) -> GWElem {
    let mut acc = GWElem::zero();
    for (w, k) in c {
        let mut x = GWElem::one();
        for l in w {
            x = &x * &l.value();
        }
        acc = &acc + &x.scale(k);
    }
    acc
}

/// The ring element a word denotes, computed by direct multiplication.
pub fn word_value(word: &[Letter]) -> GWElem {
    word.iter().fold(GWElem::one(), |acc, l| &acc * &l.value())
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect()
}

/// Every overlap `xyz` where both `xy` and `yz` are left-hand sides, with the
/// two one-step reducts of each fully normalized. Joinability of all of them
/// is local confluence.
pub fn critical_pairs() -> Vec<(Word, Combination, Combination)> {
    let mut out = Vec::new();
    for &x in &Letter::ALL {
        for &y in &Letter::ALL {
            for &z in &Letter::ALL {
                if rule(x, y).is_none() || rule(y, z).is_none() {
                    continue;
                }
                let w = vec![x, y, z];
                let reduce_at = |i: usize| {
                    let mut c = Combination::new();
                    for (coeff, rhs) in rule(w[i], w[i + 1]).unwrap() {
                        let mut nw = w[..i].to_vec();
                        nw.extend(rhs);
                        nw.extend_from_slice(&w[i + 2..]);
                        add_word(&mut c, nw, BigInt::from(coeff));
                    }
                    normalize(&mut c, Strategy::Leftmost);
                    c
                };
                out.push((w.clone(), reduce_at(0), reduce_at(1)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use Letter::*;

    #[test]
    fn tau_squared() {
        let c = normal_form(&[Tau, Tau], Strategy::Leftmost);
        assert_eq!(to_gw(&c).to_text(), "2*gamma - 2*eps*gamma");
    }

    #[test]
    fn normal_forms_are_basis_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let w = random_word(&mut rng, 10);
            for (nw, _) in normal_form(&w, Strategy::Rightmost) {
                let head: Vec<_> = nw.iter().filter(|l| matches!(l, Eps | Tau)).collect();
                assert!(head.len() <= 1);
                assert!(!(nw.contains(&Gamma) && nw.contains(&GammaInv)));
            }
        }
    }

    #[test]
    fn critical_pairs_join() {
        let pairs = critical_pairs();
        assert!(!pairs.is_empty());
        for (w, a, b) in pairs {
            assert_eq!(a, b, "overlap {w:?}");
        }
    }

    #[test]
    fn strategies_agree_on_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..500 {
            let w = random_word(&mut rng, 12);
            let l = normal_form(&w, Strategy::Leftmost);
            let r = normal_form(&w, Strategy::Rightmost);
            assert_eq!(l, r, "{w:?}");
            assert_eq!(to_gw(&l), word_value(&w));
        }
    }
}
