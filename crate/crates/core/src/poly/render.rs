//! Text, Unicode and LaTeX rendering with a fixed term order (descending).

use super::{Coeff, Monomial, Poly};

/// Unicode symbol for well-known variable names.
pub fn pretty_name(name: &str) -> String {
    match name {
        "eps" => "ε".into(),
        "tau" => "τ".into(),
        "gamma" => "γ".into(),
        "beta" => "β".into(),
        "t" => "t".into(),
        _ => name.into(),
    }
}

pub fn latex_name(name: &str) -> String {
    match name {
        "eps" => "\\epsilon".into(),
        "tau" => "\\tau".into(),
        "gamma" => "\\gamma".into(),
        "beta" => "\\beta".into(),
        _ => {
            let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
            let (base, idx) = name.split_at(split);
            if idx.is_empty() {
                base.to_string()
            } else {
                format!("{base}_{{{idx}}}")
            }
        }
    }
}

pub fn superscript(n: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut s = String::new();
    if n < 0 {
        s.push('⁻');
    }
    for ch in n.unsigned_abs().to_string().chars() {
        s.push(DIGITS[ch.to_digit(10).unwrap() as usize]);
    }
    s
}

/// Monomial factors as `(name, exponent)` in context order.
fn factors<'a>(names: &'a [String], m: &Monomial) -> Vec<(&'a str, i32)> {
    names
        .iter()
        .zip(m.exps())
        .filter(|(_, &e)| e != 0)
        .map(|(n, &e)| (n.as_str(), e))
        .collect()
}

pub fn monomial_text(names: &[String], m: &Monomial) -> String {
    factors(names, m)
        .into_iter()
        .map(|(n, e)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn monomial_pretty(names: &[String], m: &Monomial) -> String {
    factors(names, m)
        .into_iter()
        .map(|(n, e)| {
            let p = pretty_name(n);
            if e == 1 {
                p
            } else {
                format!("{p}{}", superscript(e as i64))
            }
        })
        .collect()
}

pub fn monomial_latex(names: &[String], m: &Monomial) -> String {
    factors(names, m)
        .into_iter()
        .map(|(n, e)| {
            let l = latex_name(n);
            if e == 1 {
                l
            } else {
                format!("{l}^{{{e}}}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Join signed terms. `terms` holds `(negative, |coeff| string or "" for 1, monomial string)`.
pub(crate) fn join_terms(
    terms: &[(bool, String, String)],
    sep_plus: &str,
    sep_minus: &str,
    lead_minus: &str,
    mul: &str,
) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, c, m)) in terms.iter().enumerate() {
        if i == 0 {
            if *neg {
                out.push_str(lead_minus);
            }
        } else {
            out.push_str(if *neg { sep_minus } else { sep_plus });
        }
        match (c.is_empty(), m.is_empty()) {
            (true, true) => out.push('1'),
            (true, false) => out.push_str(m),
            (false, true) => out.push_str(c),
            (false, false) => {
                out.push_str(c);
                out.push_str(mul);
                out.push_str(m);
            }
        }
    }
    out
}

impl<C: Coeff> Poly<C> {
    fn names(&self) -> Vec<String> {
        self.ctx().vars().iter().map(|v| v.name.clone()).collect()
    }

    fn signed_terms(&self, mono: impl Fn(&[String], &Monomial) -> String) -> Vec<(bool, String, String)> {
        let names = self.names();
        self.terms()
            .rev()
            .map(|(m, c)| {
                let neg = c.is_negative();
                let a = c.abs();
                let cs = if a.is_one() { String::new() } else { a.to_string() };
                (neg, cs, mono(&names, m))
            })
            .collect()
    }

    /// ASCII form, e.g. `X1^2*Y2 - 2*X2*Y2`.
    pub fn to_text(&self) -> String {
        join_terms(&self.signed_terms(monomial_text), " + ", " - ", "-", "*")
    }

    /// Unicode form, e.g. `2τγ−2εγ`.
    pub fn to_pretty(&self) -> String {
        join_terms(&self.signed_terms(monomial_pretty), "+", "−", "−", "")
    }

    pub fn to_latex(&self) -> String {
        join_terms(&self.signed_terms(monomial_latex), " + ", " - ", "-", " ")
    }
}
