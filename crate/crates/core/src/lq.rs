//! Linear quotients and homological shift ideals.

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{Monomial, Ring};
use crate::order::OrderSpec;
use crate::par;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientStep {
    /// Minimal generators of the colon of the earlier generators by this one.
    pub colon_gens: Vec<Monomial>,
    pub is_variable_generated: bool,
    /// Variables generating the colon, when it is generated by variables.
    pub set_u: Option<Vec<usize>>,
}

/// Record of a successful linear-quotients check: the generators in
/// descending order and, for each, the variables generating its prefix colon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientTrace {
    pub ring: Ring,
    pub order: OrderSpec,
    pub sorted_gens: Vec<Monomial>,
    pub steps: Vec<QuotientStep>,
}

impl QuotientTrace {
    pub fn set_u(&self, pos: usize) -> &[usize] {
        self.steps[pos].set_u.as_deref().expect("trace steps are variable generated")
    }

    /// Largest colon size, which is the projective dimension of the ideal.
    pub fn max_set_size(&self) -> usize {
        self.steps.iter().map(|s| s.set_u.as_ref().map_or(0, Vec::len)).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LqFailure {
    /// 0-based position of the first generator whose colon is not variable generated.
    pub position: usize,
    pub generator: Monomial,
    /// A minimal colon generator that is not a variable.
    pub witness: Monomial,
    pub colon_gens: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LqOutcome {
    Success(QuotientTrace),
    Failure(LqFailure),
}

impl LqOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, LqOutcome::Success(_))
    }

    pub fn trace(&self) -> Option<&QuotientTrace> {
        match self {
            LqOutcome::Success(t) => Some(t),
            LqOutcome::Failure(_) => None,
        }
    }

    pub fn into_trace(self) -> Result<QuotientTrace> {
        match self {
            LqOutcome::Success(t) => Ok(t),
            LqOutcome::Failure(f) => Err(Error::Precondition(format!(
                "no linear quotients: colon at position {} has non-variable generator {:?}",
                f.position + 1,
                f.witness
            ))),
        }
    }
}

fn quotient_step(sorted: &[Monomial], pos: usize) -> QuotientStep {
    let u = &sorted[pos];
    let nv = u.nvars();
    let quotients: Vec<Monomial> = sorted[..pos].iter().map(|v| v.colon(u)).collect();
    let mut is_var = vec![false; nv];
    for q in &quotients {
        if let Some(v) = q.as_variable() {
            is_var[v] = true;
        }
    }
    let generated = quotients.iter().all(|q| q.support().any(|v| is_var[v]));
    if generated {
        let vars: Vec<usize> = (0..nv).filter(|&v| is_var[v]).collect();
        QuotientStep {
            colon_gens: vars.iter().map(|&v| Monomial::var(nv, v)).collect(),
            is_variable_generated: true,
            set_u: Some(vars),
        }
    } else {
        QuotientStep {
            colon_gens: minimalize(quotients),
            is_variable_generated: false,
            set_u: None,
        }
    }
}

/// Sorts the generators descending under `order` and checks that every
/// prefix colon is generated by variables.
pub fn linear_quotients_check(ideal: &MonomialIdeal, order: &OrderSpec) -> Result<LqOutcome> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Precondition("linear quotients need a proper nonzero ideal".into()));
    }
    if order.nvars() != ideal.ring().nvars() {
        return Err(Error::Argument("order and ring disagree on the variable count".into()));
    }
    let sorted = ideal.sorted_by(order);
    let steps = par::map_range(sorted.len(), |pos| {
        if pos == 0 {
            QuotientStep { colon_gens: Vec::new(), is_variable_generated: true, set_u: Some(Vec::new()) }
        } else {
            quotient_step(&sorted, pos)
        }
    });
    if let Some(position) = steps.iter().position(|s| !s.is_variable_generated) {
        let step = &steps[position];
        let witness = step
            .colon_gens
            .iter()
            .find(|m| m.as_variable().is_none())
            .cloned()
            .expect("non-variable colon has a non-variable generator");
        return Ok(LqOutcome::Failure(LqFailure {
            position,
            generator: sorted[position].clone(),
            witness,
            colon_gens: step.colon_gens.clone(),
        }));
    }
    Ok(LqOutcome::Success(QuotientTrace {
        ring: ideal.ring().clone(),
        order: order.clone(),
        sorted_gens: sorted,
        steps,
    }))
}

/// Calls `f` on every `k`-subset of `items`.
pub(crate) fn for_each_subset<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    fn go<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k > items.len() {
        return;
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// `HS_k(I) = (x_F u : u in G(I), F subset of set(u), |F| = k)` for an
/// ideal with linear quotients. On paired rings every `set(u)` must consist
/// of x-variables; otherwise a finding is returned.
pub fn hs_ideal(trace: &QuotientTrace, k: usize) -> Result<MonomialIdeal> {
    if let Some(n) = trace.ring.pairs() {
        for (pos, step) in trace.steps.iter().enumerate() {
            if let Some(&v) = step.set_u.as_ref().and_then(|s| s.iter().find(|&&v| v >= n)) {
                return Err(Error::Finding(format!(
                    "set(u) of generator {} contains {}, not an x-variable",
                    trace.ring.format(&trace.sorted_gens[pos]),
                    trace.ring.name(v)
                )));
            }
        }
    }
    let mut gens = Vec::new();
    for (u, step) in trace.sorted_gens.iter().zip(&trace.steps) {
        let set = step.set_u.as_deref().unwrap_or(&[]);
        let mut err = None;
        for_each_subset(set, k, &mut |f: &[usize]| {
            let mut m = u.clone();
            for &v in f {
                if m.0[v] == u16::MAX {
                    err = Some(Error::Overflow { cap: u16::MAX as u32 });
                }
                m.0[v] += 1;
            }
            gens.push(m);
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    Ok(MonomialIdeal::from_parts(trace.ring.clone(), gens))
}
