//! Depth of powers, analytic spread and related witnesses.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{check_cm_vwc_labeling, Graph};
use crate::ideal::{cover_ideal, power, MonomialIdeal};
use crate::linalg;
use crate::lq::{linear_quotients_check, LqOutcome};
use crate::monomial::Monomial;
use crate::order::OrderSpec;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthRow {
    pub k: u32,
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthTable {
    pub rows: Vec<DepthRow>,
    /// Least k from which the depth stays constant through `k_max`.
    pub dstab_observed: u32,
    /// Depth at `k_max`.
    pub limit_observed: usize,
}

impl DepthTable {
    pub fn depths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.depth).collect()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].depth >= w[1].depth)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("k,depth\n");
        for r in &self.rows {
            s.push_str(&format!("{},{}\n", r.k, r.depth));
        }
        s
    }
}

/// `depth S/I = #vars - max|set(u)| - 1` for an ideal with linear quotients.
pub fn depth_from_quotients(ideal: &MonomialIdeal, order: &OrderSpec) -> Result<usize> {
    match linear_quotients_check(ideal, order)? {
        LqOutcome::Success(t) => Ok(ideal.ring().nvars() - t.max_set_size() - 1),
        LqOutcome::Failure(f) => Err(Error::Finding(format!(
            "power has no linear quotients under the given order: position {}, colon generator {}",
            f.position + 1,
            ideal.ring().format(&f.witness)
        ))),
    }
}

/// Depth of `S/J(G)^k` for `k = 1..=k_max`, read off the order-A linear
/// quotients of each power.
pub fn depth_table(g: &Graph, k_max: u32, caps: &Caps) -> Result<DepthTable> {
    if k_max == 0 {
        return Err(Error::Argument("k_max must be at least 1".into()));
    }
    let n = g.pairs().ok_or_else(|| Error::Labeling("depth_table needs a labeled graph".into()))?;
    let j = cover_ideal(g, caps)?.ideal;
    if j.is_unit() {
        return Err(Error::Precondition("cover ideal of the empty graph is the unit ideal".into()));
    }
    let order = OrderSpec::order_a(n);
    let mut rows = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let jk = power(&j, k)?;
        rows.push(DepthRow { k, depth: depth_from_quotients(&jk, &order)? });
    }
    let limit = rows.last().expect("k_max >= 1").depth;
    let dstab = rows
        .iter()
        .rposition(|r| r.depth != limit)
        .map_or(1, |p| rows[p + 1].k);
    Ok(DepthTable { rows, dstab_observed: dstab, limit_observed: limit })
}

/// Rank of the generator exponent matrix of an equigenerated ideal, which
/// is the Krull dimension of its fiber ring.
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(0);
    }
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::Precondition("analytic spread needs an equigenerated ideal".into()));
    }
    let rows: Vec<Vec<i64>> =
        ideal.gens().iter().map(|g| g.0.iter().map(|&e| e as i64).collect()).collect();
    Ok(linalg::rank(&rows))
}

/// For each pair index `i` (0-based), the first generator in canonical
/// order whose smallest y-index is `i`.
pub fn min_suppy_witnesses(g: &Graph, caps: &Caps) -> Result<Vec<Monomial>> {
    let n = g.pairs().ok_or_else(|| Error::Labeling("witnesses need a labeled graph".into()))?;
    let report = check_cm_vwc_labeling(g)?;
    if !report.passed {
        return Err(Error::Precondition("graph fails the labeling check".into()));
    }
    let j = cover_ideal(g, caps)?.ideal;
    (0..n)
        .map(|i| {
            j.gens()
                .iter()
                .find(|u| (0..n).find(|&p| u.0[n + p] > 0) == Some(i))
                .cloned()
                .ok_or_else(|| {
                    Error::Finding(format!("no cover generator has smallest y-index y{}", i + 1))
                })
        })
        .collect()
}
