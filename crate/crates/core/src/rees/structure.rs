//! Shape and degree checks on reduced Rees presentation bases.

use super::binomial::{Binomial, ExtRing};
use super::buchberger::GroebnerBasis;
use super::order::ExtOrder;
use crate::monomial::Monomial;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    /// Every mixed element is a swap binomial and every other element is toric.
    pub cor411_form: bool,
    /// Formatted elements that break the expected shape, with the reason.
    pub exceptions: Vec<String>,
    pub quadratic: bool,
    pub max_degree: u32,
    pub mixed: Vec<Binomial>,
}

fn single_t(ring: &ExtRing, m: &Monomial) -> Option<usize> {
    let t = ring.t_part(m);
    t.as_variable()
}

/// Pair index `i` such that `b` reads `x_i t_a - y_i t_b` with
/// `u_b = x_i u_a / y_i`.
fn swap_shape(ring: &ExtRing, b: &Binomial) -> Result<usize, &'static str> {
    let base = &ring.base;
    if base.pairs().is_none() {
        return Err("base ring has no x/y pairing");
    }
    let (lb, tb) = (ring.base_part(&b.lead), ring.base_part(&b.trail));
    let (Some(lv), Some(tv)) = (lb.as_variable(), tb.as_variable()) else {
        return Err("base parts are not single variables");
    };
    let Some(i) = base.x_index(lv) else { return Err("lead base variable is not an x") };
    if base.y_index(tv) != Some(i) {
        return Err("trail base variable is not the matching y");
    }
    let (Some(a), Some(c)) = (single_t(ring, &b.lead), single_t(ring, &b.trail)) else {
        return Err("t-parts are not single variables");
    };
    let ua = &ring.tags[a];
    let (x, y) = (base.x(i), base.y(i));
    if ua.0[y] == 0 {
        return Err("lead tag is not divisible by the y variable");
    }
    let mut swapped = ua.clone();
    swapped.0[y] -= 1;
    swapped.0[x] += 1;
    if ring.tags[c] != swapped {
        return Err("trail tag is not the swapped lead tag");
    }
    Ok(i)
}

/// All binomials `x_i t_u - y_i t_{u'}` with `y_i | u` and
/// `u' = x_i u / y_i` a generator, oriented under `order`.
pub fn swap_binomials(ring: &ExtRing, order: &ExtOrder) -> Vec<Binomial> {
    let base = &ring.base;
    let Some(n) = base.pairs() else { return Vec::new() };
    let index: HashMap<&Monomial, usize> = ring.tags.iter().enumerate().map(|(j, u)| (u, j)).collect();
    let mut out = Vec::new();
    for (a, u) in ring.tags.iter().enumerate() {
        for i in 0..n {
            let (x, y) = (base.x(i), base.y(i));
            if u.0[y] == 0 {
                continue;
            }
            let mut w = u.clone();
            w.0[y] -= 1;
            w.0[x] += 1;
            if let Some(&c) = index.get(&w) {
                let mut lead = ring.t_var(a);
                lead.0[x] += 1;
                let mut trail = ring.t_var(c);
                trail.0[y] += 1;
                out.extend(Binomial::new(lead, trail, order));
            }
        }
    }
    out.sort_by(|p, q| order.cmp(&q.lead, &p.lead));
    out
}

/// Classifies every element of a reduced Rees basis. Pure-t elements are
/// compared against `toric` when given.
pub fn structure_and_quadraticity_check(
    ring: &ExtRing,
    gb: &GroebnerBasis,
    toric: Option<&GroebnerBasis>,
) -> StructureReport {
    let toric_set: Option<HashSet<&Binomial>> = toric.map(|t| t.elements.iter().collect());
    let mut exceptions = Vec::new();
    let mut mixed = Vec::new();
    let mut max_degree = 0;
    for b in &gb.elements {
        max_degree = max_degree.max(b.degree()).max(b.trail.degree());
        if ring.involves_s(&b.lead) || ring.involves_s(&b.trail) {
            exceptions.push(format!("{}: involves s", b.format(ring)));
        } else if ring.is_pure_t(&b.lead) && ring.is_pure_t(&b.trail) {
            if let Some(set) = &toric_set {
                if !set.contains(b) {
                    exceptions.push(format!("{}: pure in t but not in the toric basis", b.format(ring)));
                }
            }
        } else {
            if let Err(reason) = swap_shape(ring, b) {
                exceptions.push(format!("{}: {reason}", b.format(ring)));
            }
            mixed.push(b.clone());
        }
    }
    StructureReport {
        cor411_form: exceptions.is_empty(),
        exceptions,
        quadratic: gb.elements.iter().all(|b| b.lead.degree() == 2 && b.trail.degree() == 2),
        max_degree,
        mixed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::fixtures::{fix1, fix2};
    use crate::ideal::cover_ideal;
    use crate::monomial::Ring;
    use crate::order::OrderSpec;
    use crate::rees::order::TOrder;
    use crate::rees::toric::{rees_presentation_ideal, toric_ideal};

    #[test]
    fn fixtures_have_swap_shape() {
        let caps = Caps::default();
        for g in [fix1(), fix2()] {
            let i = cover_ideal(&g, &caps).unwrap().ideal;
            let p = rees_presentation_ideal(&i, &caps).unwrap();
            let t = toric_ideal(&i, &TOrder::lex_by_generators(i.len()), &caps).unwrap();
            let r = structure_and_quadraticity_check(&p.ring, &p.basis, Some(&t.basis));
            assert!(r.cor411_form, "{:?}", r.exceptions);
            assert!(r.quadratic);
            assert_eq!(r.max_degree, 2);
        }
    }

    #[test]
    fn synthetic_negative() {
        let ring = ExtRing::new(Ring::paired(2), vec![Monomial(vec![1, 1, 0, 0]), Monomial(vec![0, 0, 1, 1])]);
        let order = ExtOrder::product(&ring, &OrderSpec::order_a(2), &TOrder::lex_by_generators(2)).unwrap();
        let b = ring.parse_binomial("x1*x2*t1 - y1*y2*t2", &order).unwrap();
        let gb = GroebnerBasis { order, elements: vec![b], reduced: true };
        let r = structure_and_quadraticity_check(&ring, &gb, None);
        assert!(!r.cor411_form && !r.quadratic);
        assert_eq!(r.max_degree, 3);
    }

    #[test]
    fn fix1_swaps_match_basis() {
        let caps = Caps::default();
        let i = cover_ideal(&fix1(), &caps).unwrap().ideal;
        let p = rees_presentation_ideal(&i, &caps).unwrap();
        assert_eq!(swap_binomials(&p.ring, &p.basis.order), p.basis.elements);
    }
}
