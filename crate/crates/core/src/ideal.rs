//! Monomial ideals over a fixed ring, and cover ideals of graphs.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{self, check_cm_vwc_labeling, minimal_vertex_covers, Graph};
use crate::monomial::{Monomial, Ring};
use crate::order::OrderSpec;
use crate::par;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Minimal generating set of the ideal generated by `gens`, sorted by
/// (degree, exponent vector).
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let Some(first) = gens.first() else { return gens };
    let d0 = first.degree();
    if gens.iter().all(|g| g.degree() == d0) {
        return gens;
    }
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        let d = g.degree();
        if !kept.iter().any(|k| k.degree() < d && k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Monomial ideal given by its minimal generators in canonical order
/// (descending under [`OrderSpec::default_for`] the ring).
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator `1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if let Some(bad) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
            return Err(Error::Argument(format!(
                "generator {:?} has {} exponents, ring has {} variables",
                bad,
                bad.nvars(),
                ring.nvars()
            )));
        }
        Ok(Self::from_parts(ring, gens))
    }

    pub(crate) fn from_parts(ring: Ring, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut gens = minimalize(gens);
        OrderSpec::default_for(&ring).sort_desc(&mut gens);
        MonomialIdeal { ring, gens }
    }

    pub fn zero(ring: Ring) -> MonomialIdeal {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Ring) -> MonomialIdeal {
        let one = Monomial::one(ring.nvars());
        MonomialIdeal { ring, gens: vec![one] }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Common total degree of all generators, if there is one.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Generators sorted descending under `order`.
    pub fn sorted_by(&self, order: &OrderSpec) -> Vec<Monomial> {
        let mut g = self.gens.clone();
        order.sort_desc(&mut g);
        g
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Self::from_parts(self.ring.clone(), gens)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        let gens = self.gens.iter().map(|g| g.mul(m)).collect::<Result<_>>()?;
        Ok(Self::from_parts(self.ring.clone(), gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let rows: Vec<Result<Vec<Monomial>>> =
            par::map(&self.gens, |a| other.gens.iter().map(|b| a.mul(b)).collect());
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for row in rows {
            gens.extend(row?);
        }
        Ok(Self::from_parts(self.ring.clone(), gens))
    }

    /// Human-readable generator list, e.g. `x1*x2, x1*y2`.
    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.gens.iter().map(|g| self.ring.format(g)).collect::<Vec<_>>().join(", ")
    }
}

/// `I^k`, minimalizing after every multiplication step.
pub fn power(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::Argument("power exponent must be at least 1".into()));
    }
    let mut acc = ideal.clone();
    for _ in 1..k {
        acc = acc.product(ideal)?;
    }
    Ok(acc)
}

/// Minimal generators of `(u_1, ..., u_{pos-1}) : u_pos` for a sorted
/// generator list (0-based `pos`, so `1 <= pos < len`). Contains `1` exactly
/// when an earlier generator divides `u_pos`.
pub fn colon_prefix(sorted: &[Monomial], pos: usize) -> Result<Vec<Monomial>> {
    if pos == 0 || pos >= sorted.len() {
        return Err(Error::Argument(format!(
            "colon position {pos} outside 1..{}",
            sorted.len()
        )));
    }
    let u = &sorted[pos];
    Ok(minimalize(sorted[..pos].iter().map(|v| v.colon(u)).collect()))
}

/// Subset `F` of the pair indices encoding `x_F * y_([n] \ F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoverMask(pub u64);

impl CoverMask {
    pub fn to_monomial(self, n: usize) -> Monomial {
        let mut m = Monomial::one(2 * n);
        for i in 0..n {
            if self.0 & (1 << i) != 0 {
                m.0[i] = 1;
            } else {
                m.0[n + i] = 1;
            }
        }
        m
    }

    /// Inverse of [`CoverMask::to_monomial`]; `None` unless `m` contains
    /// exactly one of `x_i, y_i` for every `i`, each to the first power.
    pub fn from_monomial(m: &Monomial, n: usize) -> Option<CoverMask> {
        if m.nvars() != 2 * n {
            return None;
        }
        let mut mask = 0u64;
        for i in 0..n {
            match (m.0[i], m.0[n + i]) {
                (1, 0) => mask |= 1 << i,
                (0, 1) => {}
                _ => return None,
            }
        }
        Some(CoverMask(mask))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverIdeal {
    pub ideal: MonomialIdeal,
    /// Per-generator masks, present when the graph is labeled and every
    /// generator has the `x_F y_([n] \ F)` shape.
    pub masks: Option<Vec<CoverMask>>,
}

/// Cover ideal from the minimal vertex covers of `g`.
pub fn cover_ideal(g: &Graph, caps: &Caps) -> Result<CoverIdeal> {
    let ring = g.ring();
    let nv = ring.nvars();
    let covers = minimal_vertex_covers(g, caps)?;
    let gens = covers.covers.iter().map(|c| Monomial::from_support(nv, c.vertices())).collect();
    let ideal = MonomialIdeal::from_parts(ring, gens);
    let masks = g
        .pairs()
        .and_then(|n| ideal.gens().iter().map(|u| CoverMask::from_monomial(u, n)).collect());
    Ok(CoverIdeal { ideal, masks })
}

/// Cover ideal built by the structural recursion
/// `J(G) = z_N(x1) J(G_1) + x1 J(G \ {x1, y1})`, where `G_1` deletes every
/// pair meeting `N(x1)`. Requires a graph passing the labeling check.
pub fn cover_ideal_recursive(g: &Graph) -> Result<MonomialIdeal> {
    let report = check_cm_vwc_labeling(g)?;
    if !report.passed {
        return Err(Error::Precondition(format!(
            "labeling check failed: {:?}",
            report.violations.iter().map(|v| v.condition).collect::<Vec<_>>()
        )));
    }
    let n = g.pairs().expect("checked");
    let mut memo = HashMap::new();
    let gens = recursive_gens(g, n, if n == 64 { u64::MAX } else { (1u64 << n) - 1 }, &mut memo);
    Ok(MonomialIdeal::from_parts(g.ring(), gens))
}

pub(crate) fn recursive_gens(
    g: &Graph,
    n: usize,
    pair_mask: u64,
    memo: &mut HashMap<u64, Vec<Monomial>>,
) -> Vec<Monomial> {
    if let Some(hit) = memo.get(&pair_mask) {
        return hit.clone();
    }
    let out = if pair_mask == 0 {
        vec![Monomial::one(2 * n)]
    } else {
        let first = pair_mask.trailing_zeros() as usize;
        let alive = graph::pair_mask_vertices(n, pair_mask);
        let nbrs = g.neighbor_mask(first) & alive;
        let z = Monomial::from_support(2 * n, graph::mask_bits(nbrs));
        let touched = graph::mask_bits(nbrs).fold(0u64, |m, v| m | 1 << (v % n));
        let x1 = Monomial::var(2 * n, first);
        let left = recursive_gens(g, n, pair_mask & !touched, memo);
        let right = recursive_gens(g, n, pair_mask & !(1 << first), memo);
        let gens = left
            .iter()
            .map(|u| u.mul(&z))
            .chain(right.iter().map(|u| u.mul(&x1)))
            .map(|r| r.expect("squarefree products stay tiny"))
            .collect();
        minimalize(gens)
    };
    memo.insert(pair_mask, out.clone());
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapResult {
    pub candidate: Monomial,
    pub is_member: bool,
}

/// Replaces `y_i` by `x_i` in the cover generator `u` (0-based `i`) and
/// reports whether the result is again a minimal vertex cover of `g`.
pub fn swap_cover(g: &Graph, u: &Monomial, i: usize) -> Result<SwapResult> {
    let n = g
        .pairs()
        .ok_or_else(|| Error::Labeling("swap_cover needs a labeled graph".into()))?;
    if i >= n || u.nvars() != 2 * n {
        return Err(Error::Argument(format!("pair index {} or monomial shape invalid", i + 1)));
    }
    if u.0[n + i] == 0 {
        return Err(Error::Argument(format!("y{} does not divide the generator", i + 1)));
    }
    let mut candidate = u.clone();
    candidate.0[n + i] -= 1;
    candidate.0[i] += 1;
    let is_member = candidate.is_squarefree() && {
        let mask = candidate.support().fold(0u64, |m, v| m | 1 << v);
        g.is_minimal_vertex_cover(mask)
    };
    Ok(SwapResult { candidate, is_member })
}
