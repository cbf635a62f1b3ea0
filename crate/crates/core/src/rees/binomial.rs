use super::order::ExtOrder;
use crate::error::Result;
use crate::monomial::{Monomial, Ring};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Polynomial ring `K[base, t_1..t_m]` (plus `s` when `elim` is set), where
/// `t_j` stands for the j-th generator of an ideal, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtRing {
    pub base: Ring,
    /// Multidegree of the generator each t-variable maps to.
    pub tags: Vec<Monomial>,
    pub elim: bool,
}

impl ExtRing {
    pub fn new(base: Ring, tags: Vec<Monomial>) -> ExtRing {
        ExtRing { base, tags, elim: false }
    }

    pub fn with_elimination(mut self) -> ExtRing {
        self.elim = true;
        self
    }

    pub fn without_elimination(mut self) -> ExtRing {
        self.elim = false;
        self
    }

    pub fn n_base(&self) -> usize {
        self.base.nvars()
    }

    pub fn n_t(&self) -> usize {
        self.tags.len()
    }

    pub fn nvars(&self) -> usize {
        self.n_base() + self.n_t() + usize::from(self.elim)
    }

    pub fn t(&self, j: usize) -> usize {
        self.n_base() + j
    }

    pub fn s(&self) -> Option<usize> {
        self.elim.then(|| self.n_base() + self.n_t())
    }

    pub fn name(&self, v: usize) -> String {
        let nb = self.n_base();
        if v < nb {
            self.base.name(v).to_string()
        } else if v < nb + self.n_t() {
            format!("t{}", v - nb + 1)
        } else {
            "s".to_string()
        }
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.nvars()).map(|v| self.name(v)).collect()
    }

    /// Embeds a base-ring monomial.
    pub fn embed(&self, m: &Monomial) -> Monomial {
        let mut e = m.0.clone();
        e.resize(self.nvars(), 0);
        Monomial(e)
    }

    pub fn t_var(&self, j: usize) -> Monomial {
        Monomial::var(self.nvars(), self.t(j))
    }

    pub fn base_part(&self, m: &Monomial) -> Monomial {
        Monomial(m.0[..self.n_base()].to_vec())
    }

    pub fn t_part(&self, m: &Monomial) -> Monomial {
        Monomial(m.0[self.n_base()..self.n_base() + self.n_t()].to_vec())
    }

    pub fn is_pure_t(&self, m: &Monomial) -> bool {
        m.0[..self.n_base()].iter().all(|&e| e == 0) && self.s().is_none_or(|s| m.0[s] == 0)
    }

    pub fn involves_s(&self, m: &Monomial) -> bool {
        self.s().is_some_and(|s| m.0[s] > 0)
    }

    /// Drops the trailing `s` coordinate.
    pub fn strip_s(&self, m: &Monomial) -> Monomial {
        Monomial(m.0[..self.n_base() + self.n_t()].to_vec())
    }

    pub fn format(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { self.name(v) } else { format!("{}^{}", self.name(v), e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn parse_monomial(&self, text: &str) -> Option<Monomial> {
        let names = self.names();
        let mut m = Monomial::one(self.nvars());
        if text.trim() == "1" {
            return Some(m);
        }
        for f in text.split('*').map(str::trim) {
            let (name, e) = match f.split_once('^') {
                Some((a, b)) => (a.trim(), b.trim().parse::<u16>().ok()?),
                None => (f, 1),
            };
            m.0[names.iter().position(|s| s == name)?] += e;
        }
        Some(m)
    }

    pub fn parse_binomial(&self, text: &str, order: &ExtOrder) -> Option<Binomial> {
        let (a, b) = text.split_once(" - ")?;
        Binomial::new(self.parse_monomial(a)?, self.parse_monomial(b)?, order)
    }
}

/// `lead - trail` with `lead > trail` in the active order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    /// Orients `a - b`; `None` when the terms coincide.
    pub fn new(a: Monomial, b: Monomial, order: &ExtOrder) -> Option<Binomial> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.lead.degree().max(self.trail.degree())
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Binomial> {
        Ok(Binomial { lead: self.lead.mul(m)?, trail: self.trail.mul(m)? })
    }

    pub fn format(&self, ring: &ExtRing) -> String {
        format!("{} - {}", ring.format(&self.lead), ring.format(&self.trail))
    }
}
