//! Toric ideals and Rees presentation ideals by elimination.

use super::binomial::{Binomial, ExtRing};
use super::buchberger::{reduced_gb_weighted, GroebnerBasis};
use super::order::{ExtOrder, TOrder};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::OrderSpec;
use serde::{Deserialize, Serialize};

/// Reduced basis of the toric ideal `ker(t_j -> u_j)`.
///
/// Elements live in the coordinates of `ring` but involve t-variables only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricIdeal {
    pub ring: ExtRing,
    pub basis: GroebnerBasis,
}

/// Reduced basis of the presentation ideal `ker(x -> x, t_j -> u_j s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesPresentation {
    pub ring: ExtRing,
    pub basis: GroebnerBasis,
}

impl ReesPresentation {
    /// Elements involving at least one base variable.
    pub fn mixed(&self) -> impl Iterator<Item = &Binomial> {
        self.basis.elements.iter().filter(|b| !self.ring.is_pure_t(&b.lead) || !self.ring.is_pure_t(&b.trail))
    }

    pub fn pure_t(&self) -> impl Iterator<Item = &Binomial> {
        self.basis.elements.iter().filter(|b| self.ring.is_pure_t(&b.lead) && self.ring.is_pure_t(&b.trail))
    }
}

/// `t_i > t_j` whenever `u_i > u_j` under `base`.
pub fn default_t_order(ideal: &MonomialIdeal, base: &OrderSpec) -> TOrder {
    let gens = ideal.gens();
    let mut idx: Vec<usize> = (0..gens.len()).collect();
    idx.sort_by(|&a, &b| base.cmp(&gens[b], &gens[a]));
    TOrder::Lex(idx)
}

/// Grading with `deg t_j = deg u_j + shift` that makes the elimination
/// generators homogeneous (`shift` is the weight of `s`).
fn weights(ring: &ExtRing, shift: u32) -> Vec<u32> {
    let mut w = vec![1; ring.nvars()];
    for (j, tag) in ring.tags.iter().enumerate() {
        w[ring.t(j)] = tag.degree() + shift;
    }
    w
}

fn nonempty(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::Precondition("ideal has no generators".into()));
    }
    Ok(())
}

/// Toric ideal of `K[u_1, ..., u_m]`, eliminating the base variables from
/// `(t_j - u_j)` under a product order whose t-part is `t_order`.
pub fn toric_ideal(ideal: &MonomialIdeal, t_order: &TOrder, caps: &Caps) -> Result<ToricIdeal> {
    nonempty(ideal)?;
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::Precondition("toric ideal requires an equigenerated ideal".into()));
    }
    let ring = ExtRing::new(ideal.ring().clone(), ideal.gens().to_vec());
    let order = ExtOrder::product(&ring, &OrderSpec::default_for(ideal.ring()), t_order)?;
    let gens: Vec<Binomial> = (0..ring.n_t())
        .filter_map(|j| Binomial::new(ring.t_var(j), ring.embed(&ring.tags[j]), &order))
        .collect();
    let full = reduced_gb_weighted(&gens, &order, &weights(&ring, 0), caps)?;
    // base variables form the leading block, so the pure-t part is already
    // the reduced basis of the elimination ideal
    let elements = full.elements.into_iter().filter(|b| ring.is_pure_t(&b.lead) && ring.is_pure_t(&b.trail)).collect();
    Ok(ToricIdeal { ring, basis: GroebnerBasis { order, elements, reduced: true } })
}

/// Rees presentation ideal under the product of `base` and `t_order`,
/// eliminating `s` from `(t_j - u_j s)`.
pub fn rees_groebner(
    ideal: &MonomialIdeal,
    base: &OrderSpec,
    t_order: &TOrder,
    caps: &Caps,
) -> Result<ReesPresentation> {
    nonempty(ideal)?;
    if base.nvars() != ideal.ring().nvars() {
        return Err(Error::Argument("base order does not match the ring".into()));
    }
    let ring = ExtRing::new(ideal.ring().clone(), ideal.gens().to_vec()).with_elimination();
    let s = ring.s().expect("elimination ring has s");
    let order = ExtOrder::product(&ring, base, t_order)?;
    let gens: Vec<Binomial> = (0..ring.n_t())
        .filter_map(|j| {
            let mut us = ring.embed(&ring.tags[j]);
            us.0[s] = 1;
            Binomial::new(ring.t_var(j), us, &order)
        })
        .collect();
    let full = reduced_gb_weighted(&gens, &order, &weights(&ring, 1), caps)?;
    let elements = full
        .elements
        .iter()
        .filter(|b| !ring.involves_s(&b.lead) && !ring.involves_s(&b.trail))
        .map(|b| Binomial { lead: ring.strip_s(&b.lead), trail: ring.strip_s(&b.trail) })
        .collect();
    let ring = ring.without_elimination();
    Ok(ReesPresentation { ring, basis: GroebnerBasis { order: order.without_first_block(), elements, reduced: true } })
}

/// Rees presentation ideal under the default product order.
pub fn rees_presentation_ideal(ideal: &MonomialIdeal, caps: &Caps) -> Result<ReesPresentation> {
    let base = OrderSpec::default_for(ideal.ring());
    let t = default_t_order(ideal, &base);
    rees_groebner(ideal, &base, &t, caps)
}

/// Image of `m` under `x -> x, t_j -> u_j s`, as (base exponents, s-degree).
fn rees_image(ring: &ExtRing, m: &Monomial) -> (Vec<u32>, u32) {
    let mut img: Vec<u32> = m.0[..ring.n_base()].iter().map(|&e| e as u32).collect();
    let mut sdeg = 0u32;
    for (j, tag) in ring.tags.iter().enumerate() {
        let e = m.0[ring.t(j)] as u32;
        if e > 0 {
            sdeg += e;
            for (a, &t) in img.iter_mut().zip(&tag.0) {
                *a += e * t as u32;
            }
        }
    }
    (img, sdeg)
}

/// Whether both terms of `b` have the same image under the Rees map.
/// For pure-t binomials of an equigenerated ideal this is the toric map.
pub fn check_kernel(ring: &ExtRing, b: &Binomial) -> bool {
    rees_image(ring, &b.lead) == rees_image(ring, &b.trail)
}

/// Degree-`n` monomials in the t-variables outside the initial ideal of
/// `toric`, as t-exponent vectors sorted descending under the t-order.
pub fn standard_monomials(toric: &ToricIdeal, n: u16, caps: &Caps) -> Result<Vec<Monomial>> {
    let ring = &toric.ring;
    let m = ring.n_t();
    let leads: Vec<Monomial> = toric.basis.leads().map(|l| ring.t_part(l)).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u16; m];
    let mut visited = 0usize;
    compositions(&mut cur, 0, n, &mut |e| {
        visited += 1;
        if visited > caps.std_monomials {
            return Err(Error::Resource { what: "standard monomials", cap: caps.std_monomials });
        }
        let mono = Monomial(e.to_vec());
        if !leads.iter().any(|l| l.divides(&mono)) {
            out.push(mono);
        }
        Ok(())
    })?;
    let order = &toric.basis.order;
    out.sort_by(|a, b| order.cmp(&embed_t(ring, b), &embed_t(ring, a)));
    Ok(out)
}

pub(crate) fn embed_t(ring: &ExtRing, t: &Monomial) -> Monomial {
    let mut e = vec![0u16; ring.nvars()];
    e[ring.n_base()..ring.n_base() + ring.n_t()].copy_from_slice(&t.0);
    Monomial(e)
}

fn compositions(
    cur: &mut [u16],
    pos: usize,
    left: u16,
    f: &mut dyn FnMut(&[u16]) -> Result<()>,
) -> Result<()> {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        f(cur)?;
        cur[pos] = 0;
        return Ok(());
    }
    if cur.is_empty() {
        return if left == 0 { f(cur) } else { Ok(()) };
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        compositions(cur, pos + 1, left - e, f)?;
    }
    cur[pos] = 0;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fix1, fix2, fix3};
    use crate::ideal::cover_ideal;

    fn j(g: &crate::graph::Graph) -> MonomialIdeal {
        cover_ideal(g, &Caps::default()).unwrap().ideal
    }

    fn formatted(p: &ReesPresentation) -> Vec<String> {
        p.basis.elements.iter().map(|b| b.format(&p.ring)).collect()
    }

    #[test]
    fn fix3_presentation() {
        let p = rees_presentation_ideal(&j(&fix3()), &Caps::default()).unwrap();
        assert_eq!(formatted(&p), vec!["x1*t2 - y1*t1"]);
    }

    #[test]
    fn fix1_presentation() {
        let i = j(&fix1());
        let p = rees_presentation_ideal(&i, &Caps::default()).unwrap();
        let mut got = formatted(&p);
        got.sort();
        assert_eq!(got, vec!["x1*t3 - y1*t1", "x2*t2 - y2*t1"]);
        for b in &p.basis.elements {
            assert!(check_kernel(&p.ring, b));
        }
    }

    #[test]
    fn small_toric_ideals_vanish() {
        for g in [fix1(), fix3()] {
            let i = j(&g);
            let t = toric_ideal(&i, &TOrder::lex_by_generators(i.len()), &Caps::default()).unwrap();
            assert!(t.basis.is_empty());
        }
    }

    #[test]
    fn fix2_toric_contains_swap_relation() {
        let i = j(&fix2());
        let t = toric_ideal(&i, &TOrder::lex_by_generators(i.len()), &Caps::default()).unwrap();
        let got: Vec<String> = t.basis.elements.iter().map(|b| b.format(&t.ring)).collect();
        assert!(got.contains(&"t1*t4 - t2*t3".to_string()), "{got:?}");
        for b in &t.basis.elements {
            assert!(check_kernel(&t.ring, b));
        }
    }

    #[test]
    fn standard_monomial_counts() {
        let caps = Caps::default();
        let i1 = j(&fix1());
        let t1 = toric_ideal(&i1, &TOrder::lex_by_generators(3), &caps).unwrap();
        assert_eq!(standard_monomials(&t1, 2, &caps).unwrap().len(), 6);
        assert_eq!(standard_monomials(&t1, 0, &caps).unwrap(), vec![Monomial(vec![0; 3])]);
        let i2 = j(&fix2());
        let t2 = toric_ideal(&i2, &TOrder::lex_by_generators(i2.len()), &caps).unwrap();
        assert_eq!(standard_monomials(&t2, 2, &caps).unwrap().len(), 35);
    }

    #[test]
    fn standard_monomial_cap() {
        let i1 = j(&fix1());
        let caps = Caps { std_monomials: 3, ..Caps::default() };
        let t1 = toric_ideal(&i1, &TOrder::lex_by_generators(3), &caps).unwrap();
        assert!(matches!(standard_monomials(&t1, 2, &caps), Err(Error::Resource { .. })));
    }

    #[test]
    fn default_t_order_follows_generators() {
        let i = j(&fix1());
        assert_eq!(default_t_order(&i, &OrderSpec::default_for(i.ring())), TOrder::Lex(vec![0, 1, 2]));
    }
}
