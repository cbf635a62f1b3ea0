//! Buchberger completion for binomial ideals.
//!
//! S-polynomials and reductions of `+1/-1` binomials by such binomials are
//! again binomials or zero, so no general polynomial type is needed. Pairs
//! are processed by smallest lcm degree, ties broken by the lcm in the
//! active order and then by index, which makes the run deterministic.

use super::binomial::Binomial;
use super::order::ExtOrder;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    pub order: ExtOrder,
    /// Sorted by descending lead term when `reduced`.
    pub elements: Vec<Binomial>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn leads(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|b| &b.lead)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(Binomial::degree).max().unwrap_or(0)
    }
}

/// `(L / lead_a) * trail_a - (L / lead_b) * trail_b` with `L` the lcm of the leads.
pub fn s_polynomial(a: &Binomial, b: &Binomial, order: &ExtOrder) -> Result<Option<Binomial>> {
    let l = a.lead.lcm(&b.lead);
    let p = a.trail.mul(&l.div(&a.lead))?;
    let q = b.trail.mul(&l.div(&b.lead))?;
    Ok(Binomial::new(p, q, order))
}

fn reduce_term(term: &Monomial, basis: &[Binomial]) -> Result<Option<Monomial>> {
    match basis.iter().find(|g| g.lead.divides(term)) {
        Some(g) => Ok(Some(term.div(&g.lead).mul(&g.trail)?)),
        None => Ok(None),
    }
}

/// Full normal form of `b` modulo `basis`; `None` when it reduces to zero.
pub fn normal_form(b: &Binomial, basis: &[Binomial], order: &ExtOrder) -> Result<Option<Binomial>> {
    let mut cur = b.clone();
    while let Some(t) = reduce_term(&cur.lead, basis)? {
        match Binomial::new(t, cur.trail.clone(), order) {
            Some(next) => cur = next,
            None => return Ok(None),
        }
    }
    // the lead is now irreducible; reductions only lower the trail
    while let Some(t) = reduce_term(&cur.trail, basis)? {
        if t == cur.lead {
            return Ok(None);
        }
        cur.trail = t;
    }
    Ok(Some(cur))
}

/// Support bitmask used to reject divisibility tests early.
fn support_mask(m: &Monomial) -> u128 {
    m.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |acc, (v, _)| acc | 1u128 << (v % 128))
}

fn weighted_degree(m: &Monomial, weights: &[u32]) -> u64 {
    m.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
}

struct Pair<'o> {
    degree: u64,
    lcm: Monomial,
    i: usize,
    j: usize,
    order: &'o ExtOrder,
}

impl PartialEq for Pair<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Pair<'_> {}
impl PartialOrd for Pair<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.order.cmp(&self.lcm, &other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

struct Engine<'o> {
    order: &'o ExtOrder,
    weights: Vec<u32>,
    elements: Vec<Binomial>,
    masks: Vec<u128>,
    /// Elements whose lead is divisible by a later lead; they take no new pairs.
    redundant: Vec<bool>,
    queue: BTreeSet<Pair<'o>>,
}

impl<'o> Engine<'o> {
    fn divisor(&self, term: &Monomial) -> Option<usize> {
        let tm = support_mask(term);
        (0..self.elements.len()).find(|&k| {
            !self.redundant[k] && self.masks[k] & !tm == 0 && self.elements[k].lead.divides(term)
        })
    }

    /// Reduces the lead until no active lead divides it.
    fn top_reduce(&self, b: Binomial) -> Result<Option<Binomial>> {
        let mut cur = b;
        while let Some(k) = self.divisor(&cur.lead) {
            let g = &self.elements[k];
            let t = cur.lead.div(&g.lead).mul(&g.trail)?;
            match Binomial::new(t, cur.trail, self.order) {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// Inserts `h` with the Gebauer-Moeller pair update.
    fn insert(&mut self, h: Binomial) {
        let k = self.elements.len();
        let lead_h = h.lead.clone();
        let mut cands: Vec<(usize, Monomial)> = (0..k)
            .filter(|&i| !self.redundant[i])
            .map(|i| (i, self.elements[i].lead.lcm(&lead_h)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((i, l)) = cands.pop() {
            let coprime = self.elements[i].lead.coprime(&lead_h);
            if coprime || !cands.iter().chain(&kept).any(|(_, l2)| l2.divides(&l)) {
                kept.push((i, l));
            }
        }
        let elements = &self.elements;
        self.queue.retain(|p| {
            !(lead_h.divides(&p.lcm)
                && elements[p.i].lead.lcm(&lead_h) != p.lcm
                && elements[p.j].lead.lcm(&lead_h) != p.lcm)
        });
        for i in 0..k {
            if !self.redundant[i] && lead_h.divides(&self.elements[i].lead) {
                self.redundant[i] = true;
            }
        }
        for (i, l) in kept {
            if !self.elements[i].lead.coprime(&lead_h) {
                let degree = weighted_degree(&l, &self.weights);
                self.queue.insert(Pair { degree, lcm: l, i, j: k, order: self.order });
            }
        }
        self.masks.push(support_mask(&lead_h));
        self.redundant.push(false);
        self.elements.push(h);
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
/// Input binomials are re-oriented under `order`.
pub fn reduced_gb(gens: &[Binomial], order: &ExtOrder, caps: &Caps) -> Result<GroebnerBasis> {
    let n = gens.first().map_or(0, |g| g.lead.nvars());
    reduced_gb_weighted(gens, order, &vec![1; n], caps)
}

/// As [`reduced_gb`], selecting pairs by smallest lcm degree under
/// `weights`. With weights that make the input homogeneous this is the
/// graded normal strategy.
pub fn reduced_gb_weighted(
    gens: &[Binomial],
    order: &ExtOrder,
    weights: &[u32],
    caps: &Caps,
) -> Result<GroebnerBasis> {
    let mut eng = Engine {
        order,
        weights: weights.to_vec(),
        elements: Vec::new(),
        masks: Vec::new(),
        redundant: Vec::new(),
        queue: BTreeSet::new(),
    };
    let mut input: Vec<Binomial> =
        gens.iter().filter_map(|g| Binomial::new(g.lead.clone(), g.trail.clone(), order)).collect();
    input.sort_by(|a, b| {
        weighted_degree(&a.lead, weights).cmp(&weighted_degree(&b.lead, weights)).then_with(|| order.cmp(&a.lead, &b.lead))
    });
    for g in input {
        if let Some(r) = eng.top_reduce(g)? {
            eng.insert(r);
        }
    }
    let mut processed = 0usize;
    while let Some(pair) = eng.queue.pop_first() {
        processed += 1;
        if processed > caps.spairs {
            return Err(Error::Resource { what: "S-pairs", cap: caps.spairs });
        }
        let Some(s) = s_polynomial(&eng.elements[pair.i], &eng.elements[pair.j], order)? else { continue };
        if let Some(r) = eng.top_reduce(s)? {
            eng.insert(r);
        }
    }
    let active: Vec<Binomial> =
        eng.elements.iter().zip(&eng.redundant).filter(|(_, &r)| !r).map(|(b, _)| b.clone()).collect();
    Ok(GroebnerBasis { order: order.clone(), elements: interreduce(active, order)?, reduced: true })
}

/// Minimal leads, fully reduced trails, sorted by descending lead.
fn interreduce(mut basis: Vec<Binomial>, order: &ExtOrder) -> Result<Vec<Binomial>> {
    basis.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    let mut minimal: Vec<Binomial> = Vec::new();
    for b in basis {
        if !minimal.iter().any(|m| m.lead.divides(&b.lead)) {
            minimal.push(b);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for b in &minimal {
        let mut trail = b.trail.clone();
        while let Some(t) = reduce_term(&trail, &minimal)? {
            trail = t;
        }
        if trail != b.lead {
            out.push(Binomial { lead: b.lead.clone(), trail });
        }
    }
    out.sort_by(|a, b| order.cmp(&b.lead, &a.lead));
    Ok(out)
}

/// Checks that every S-polynomial of `basis` reduces to zero; returns the
/// first offending pair otherwise.
pub fn verify_groebner(basis: &GroebnerBasis) -> Result<std::result::Result<(), (usize, usize)>> {
    let els = &basis.elements;
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            if let Some(s) = s_polynomial(&els[i], &els[j], &basis.order)? {
                if normal_form(&s, els, &basis.order)?.is_some() {
                    return Ok(Err((i, j)));
                }
            }
        }
    }
    Ok(Ok(()))
}
