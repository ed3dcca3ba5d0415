//! JSON interchange: `{"vars":[{"name","laurent"}],"terms":[{"coeff","exps"}]}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{parse_coeff, Coeff, Ctx, Poly, VarId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<VarId>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    /// Decimal string, so big integers survive any JSON reader.
    pub coeff: String,
    pub exps: Vec<i32>,
}

impl<C: Coeff> Poly<C> {
    /// Terms are listed in descending monomial order.
    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            vars: self.ctx().vars().to_vec(),
            terms: self
                .terms()
                .rev()
                .map(|(m, c)| TermJson { coeff: c.to_string(), exps: m.exps().to_vec() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// Parse into a fresh context built from the `vars` list.
    pub fn from_json(s: &str) -> Result<Self> {
        let v: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let ctx = Ctx::new(v.vars.clone())?;
        Self::from_json_value(&v, &ctx)
    }

    /// Parse against an existing context (variable lists must match).
    pub fn from_json_value(v: &PolyJson, ctx: &Arc<Ctx>) -> Result<Self> {
        if v.vars != ctx.vars() {
            return Err(Error::Context);
        }
        let mut terms = Vec::with_capacity(v.terms.len());
        for t in &v.terms {
            if t.exps.len() != ctx.len() {
                return Err(Error::Parse(format!(
                    "exponent array of length {} for {} variables",
                    t.exps.len(),
                    ctx.len()
                )));
            }
            terms.push((t.exps.clone(), parse_coeff::<C>(&t.coeff)?));
        }
        Poly::from_terms(ctx, terms)
    }
}
