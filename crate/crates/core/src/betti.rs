//! Multigraded Betti numbers from first principles.
//!
//! `beta_{i,a}(I)` is the dimension of the reduced homology `H_{i-1}` of
//! the upper Koszul complex `{F subset of supp(a) : x^a / x_F in I}`,
//! computed over Q with exact integer rank. Serves as an independent
//! oracle for the homological shift ideals read off linear quotients.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::monomial::{Monomial, Ring};
use crate::par;
use serde_json::{Map, Value};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    /// `(i, a) -> beta_{i,a}`; zero entries are omitted.
    pub entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Sum of `beta_{i,a}` over all multidegrees.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((j, _), _)| *j == i).map(|(_, &b)| b).sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Multidegrees with a nonzero Betti number in homological degree `i`.
    pub fn multidegrees(&self, i: usize) -> Vec<Monomial> {
        self.entries.keys().filter(|(j, _)| *j == i).map(|(_, a)| a.clone()).collect()
    }

    /// `HS_i(I)`: the ideal generated by the multidegrees of `beta_{i,*}`.
    pub fn shift_ideal(&self, i: usize, ring: &Ring) -> MonomialIdeal {
        MonomialIdeal::from_parts(ring.clone(), self.multidegrees(i))
    }

    /// JSON object keyed by `"i:monomial"`.
    pub fn to_json(&self, ring: &Ring) -> Value {
        let mut map = Map::new();
        for ((i, a), b) in &self.entries {
            map.insert(format!("{}:{}", i, ring.format(a)), Value::from(*b));
        }
        Value::Object(map)
    }
}

pub fn betti_oracle(ideal: &MonomialIdeal, caps: &Caps) -> Result<BettiTable> {
    let mut table = BettiTable::default();
    if ideal.is_zero() {
        return Ok(table);
    }
    let nv = ideal.ring().nvars();
    let gens = ideal.gens();
    let bound = gens.iter().fold(Monomial::one(nv), |acc, g| acc.lcm(g));
    let max_degree = gens.iter().map(Monomial::degree).max().unwrap_or(0) + nv as u32;
    let radix: Vec<usize> = bound.0.iter().map(|&e| e as usize + 1).collect();
    let count = radix.iter().try_fold(1usize, |acc, &r| acc.checked_mul(r));
    let count = match count {
        Some(c) if c <= caps.betti_points => c,
        _ => return Err(Error::Resource { what: "Betti oracle multidegrees", cap: caps.betti_points }),
    };

    let chunk = 4096;
    let chunks = count.div_ceil(chunk);
    let found: Vec<Vec<(usize, Monomial, u64)>> = par::map_range(chunks, |c| {
        let mut out = Vec::new();
        for idx in c * chunk..((c + 1) * chunk).min(count) {
            let a = decode(idx, &radix);
            if a.degree() > max_degree {
                continue;
            }
            for (i, b) in betti_at(gens, &a) {
                out.push((i, a.clone(), b));
            }
        }
        out
    });
    for (i, a, b) in found.into_iter().flatten() {
        table.entries.insert((i, a), b);
    }
    Ok(table)
}

fn decode(mut idx: usize, radix: &[usize]) -> Monomial {
    let mut e = vec![0u16; radix.len()];
    for (v, &r) in radix.iter().enumerate() {
        e[v] = (idx % r) as u16;
        idx /= r;
    }
    Monomial(e)
}

/// Nonzero `(i, beta_{i,a})` at one multidegree.
fn betti_at(gens: &[Monomial], a: &Monomial) -> Vec<(usize, u64)> {
    let below: Vec<&Monomial> = gens.iter().filter(|g| g.divides(a)).collect();
    if below.is_empty() {
        return Vec::new();
    }
    // Betti multidegrees are lcms of generators
    let lcm = below.iter().fold(Monomial::one(a.nvars()), |acc, g| acc.lcm(g));
    if &lcm != a {
        return Vec::new();
    }
    let verts: Vec<usize> = a.support().collect();
    let in_ideal = |face: u64| -> bool {
        let mut m = a.clone();
        for (k, &v) in verts.iter().enumerate() {
            if face & (1 << k) != 0 {
                m.0[v] -= 1;
            }
        }
        below.iter().any(|g| g.divides(&m))
    };
    // faces by size; the complex is closed under taking subsets
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    loop {
        let last = levels.last().expect("nonempty");
        let mut next = Vec::new();
        for &f in last {
            let start = if f == 0 { 0 } else { 64 - f.leading_zeros() as usize };
            for k in start..verts.len() {
                let g = f | 1 << k;
                if in_ideal(g) {
                    next.push(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    // ranks[s] = rank of the boundary from faces of size s to size s - 1
    let mut ranks = vec![0usize; levels.len() + 1];
    for s in 1..levels.len() {
        let index: HashMap<u64, usize> =
            levels[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let rows: Vec<Vec<i64>> = levels[s]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; levels[s - 1].len()];
                let mut sign = 1i64;
                for k in 0..verts.len() {
                    if f & (1 << k) != 0 {
                        row[index[&(f & !(1 << k))]] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        ranks[s] = linalg::rank(&rows);
    }
    let mut out = Vec::new();
    for s in 0..levels.len() {
        // faces of size s have dimension s - 1; they carry beta_s
        let h = levels[s].len() - ranks[s] - ranks[s + 1];
        if h > 0 {
            out.push((s, h as u64));
        }
    }
    out
}
