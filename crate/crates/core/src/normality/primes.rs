//! Associated primes of monomial ideals by localization at variable subsets.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::{minimalize, power, MonomialIdeal};
use crate::monomial::{Monomial, Ring};
use crate::par;
use serde::{Deserialize, Serialize};

/// Prime generated by the variables in `vars` (sorted, nonempty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialPrime {
    pub vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn format(&self, ring: &Ring) -> String {
        let names: Vec<&str> = self.vars.iter().map(|&v| ring.name(v)).collect();
        format!("({})", names.join(", "))
    }
}

/// Whether `F` (a variable bitmask) gives an associated prime: the
/// localization `I_F` has a monomial `v` outside it with `z_i v in I_F` for
/// every `i in F`.
fn is_associated(gens: &[Monomial], f: u64, nv: usize, cap: usize) -> Result<bool> {
    let in_f = |v: usize| f >> v & 1 == 1;
    let local = minimalize(
        gens.iter()
            .map(|g| Monomial(g.0.iter().enumerate().map(|(v, &e)| if in_f(v) { e } else { 0 }).collect()))
            .collect(),
    );
    if local.iter().any(Monomial::is_one) {
        return Ok(false);
    }
    let vars: Vec<usize> = (0..nv).filter(|&v| in_f(v)).collect();
    // a witness has v_i <= max_i - 1; a variable absent from I_F rules F out
    let maxes: Vec<u16> = vars.iter().map(|&v| local.iter().map(|g| g.0[v]).max().unwrap_or(0)).collect();
    if maxes.contains(&0) {
        return Ok(false);
    }
    let size = maxes.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m as usize).filter(|&s| s <= cap));
    let size = size.ok_or(Error::Resource { what: "associated prime witnesses", cap })?;
    let member = |w: &Monomial| local.iter().any(|g| g.divides(w));
    let mut w = Monomial::one(nv);
    for mut idx in 0..size {
        for (&v, &m) in vars.iter().zip(&maxes) {
            w.0[v] = (idx % m as usize) as u16;
            idx /= m as usize;
        }
        if member(&w) {
            continue;
        }
        let socle = vars.iter().all(|&v| {
            w.0[v] += 1;
            let hit = member(&w);
            w.0[v] -= 1;
            hit
        });
        if socle {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All associated primes, sorted by size and then by variables.
pub fn associated_primes(ideal: &MonomialIdeal, caps: &Caps) -> Result<Vec<MonomialPrime>> {
    let nv = ideal.ring().nvars();
    if nv >= 32 {
        return Err(Error::Argument("associated primes are limited to fewer than 32 variables".into()));
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(Vec::new());
    }
    let subsets = (1u64 << nv) - 1;
    let flags = par::try_map_range(subsets as usize, |s| is_associated(ideal.gens(), s as u64 + 1, nv, caps.ass_search))?;
    let mut primes: Vec<MonomialPrime> = flags
        .iter()
        .enumerate()
        .filter(|(_, &a)| a)
        .map(|(s, _)| MonomialPrime { vars: (0..nv).filter(|&v| (s as u64 + 1) >> v & 1 == 1).collect() })
        .collect();
    primes.sort_by(|a, b| a.vars.len().cmp(&b.vars.len()).then_with(|| a.vars.cmp(&b.vars)));
    Ok(primes)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceReport {
    /// `Ass(I^k)` for `k = 1..=k_max`.
    pub ass: Vec<Vec<MonomialPrime>>,
    /// First `k` with a prime of `Ass(I^k)` missing from `Ass(I^(k+1))`.
    pub first_violation: Option<(u32, MonomialPrime)>,
}

impl PersistenceReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks `Ass(I) <= Ass(I^2) <= ... <= Ass(I^k_max)`.
pub fn persistence_check(ideal: &MonomialIdeal, k_max: u32, caps: &Caps) -> Result<PersistenceReport> {
    if k_max == 0 {
        return Err(Error::Argument("k_max must be at least 1".into()));
    }
    let mut ass = Vec::new();
    for k in 1..=k_max {
        ass.push(associated_primes(&power(ideal, k)?, caps)?);
    }
    let first_violation = ass.windows(2).enumerate().find_map(|(i, w)| {
        w[0].iter().find(|p| !w[1].contains(p)).map(|p| (i as u32 + 1, p.clone()))
    });
    Ok(PersistenceReport { ass, first_violation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fix1, fix3};
    use crate::ideal::cover_ideal;

    fn j(g: &crate::graph::Graph) -> MonomialIdeal {
        cover_ideal(g, &Caps::default()).unwrap().ideal
    }

    fn p(v: &[usize]) -> MonomialPrime {
        MonomialPrime { vars: v.to_vec() }
    }

    #[test]
    fn edge_primes_of_fix1() {
        // x1 = 0, x2 = 1, y1 = 2, y2 = 3
        let got = associated_primes(&j(&fix1()), &Caps::default()).unwrap();
        assert_eq!(got, vec![p(&[0, 1]), p(&[0, 2]), p(&[1, 3])]);
    }

    #[test]
    fn principal() {
        let i = MonomialIdeal::new(Ring::paired(1), vec![Monomial(vec![1, 1])]).unwrap();
        assert_eq!(associated_primes(&i, &Caps::default()).unwrap(), vec![p(&[0]), p(&[1])]);
    }

    #[test]
    fn embedded_prime() {
        // (x^2, x y) = (x) cap (x^2, y)
        let i = MonomialIdeal::new(Ring::paired(1), vec![Monomial(vec![2, 0]), Monomial(vec![1, 1])]).unwrap();
        assert_eq!(associated_primes(&i, &Caps::default()).unwrap(), vec![p(&[0]), p(&[0, 1])]);
    }

    #[test]
    fn persistence_on_fixtures() {
        let r1 = persistence_check(&j(&fix1()), 3, &Caps::default()).unwrap();
        assert!(r1.passed());
        assert!(r1.ass[1].len() >= r1.ass[0].len());
        let r3 = persistence_check(&j(&fix3()), 3, &Caps::default()).unwrap();
        assert!(r3.passed());
        assert!(r3.ass.iter().all(|a| a == &vec![p(&[0, 1])]));
    }
}
